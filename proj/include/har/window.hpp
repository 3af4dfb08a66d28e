#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "har/series.hpp"

namespace har {

inline constexpr int kWindowSize = 8;

using Window = std::array<double, kWindowSize>;

// Time-aligned per-axis windows over the same sample indices.
struct WindowTriple {
    Window wx{};
    Window wy{};
    Window wz{};
    std::optional<Activity> label;
};

// Majority label of a window's samples; ties go to the smallest code.
Activity majority_label(std::span<const Activity> labels);

// Windows start at 0, stride, 2*stride, ...; a trailing partial window is
// dropped. Labels come from the per-window sample majority.
std::vector<WindowTriple> window_triples(const LabeledSeries& series, int stride = kWindowSize);

// Same windowing over pre-filtered per-axis sequences.
std::vector<WindowTriple> window_triples(std::span<const double> x, std::span<const double> y,
                                         std::span<const double> z,
                                         std::span<const Activity> labels, int stride);

}  // namespace har
