#pragma once

#include <array>
#include <cstdint>

#include "har/series.hpp"

namespace har {

// Per-activity sinusoid-plus-noise shape. `z_gain` scales the z-axis
// amplitude so Jumping is separable from Running by axis profile.
struct ActivityShape {
    double amplitude = 0.0;  // m/s^2
    double frequency = 0.0;  // Hz
    double noise_sd = 0.0;   // m/s^2
    double z_gain = 1.0;
};

struct SynthParams {
    std::array<ActivityShape, kActivityCount> shapes = kDefaultShapes;
    std::array<double, 3> gravity = kDefaultGravity;  // m/s^2 per axis
    double sample_rate_hz = kDefaultSampleRateHz;
    std::uint64_t seed = 0;

    // Amplitude/frequency non-decreasing from Idle through Running; Jumping
    // mirrors a hand-held phone's dominant vertical motion via z_gain.
    static constexpr std::array<ActivityShape, kActivityCount> kDefaultShapes = {{
        {0.0, 0.0, 0.3, 1.0},   // Idle
        {1.5, 2.0, 0.4, 1.0},   // SlowWalking
        {3.0, 5.0, 0.6, 1.0},   // NormalWalking
        {5.0, 10.0, 0.9, 1.0},  // FastWalking
        {8.0, 18.0, 1.4, 1.0},  // Jogging
        {12.0, 30.0, 2.0, 1.0}, // Running
        {10.0, 24.0, 1.8, 1.8}, // Jumping
    }};

    // Orientation of a phone held in the right hand (gravity mostly along x),
    // matching the magnitudes seen in typical idle captures.
    static constexpr std::array<double, 3> kDefaultGravity = {8.66, -3.42, 3.32};

    void validate() const;
};

// Deterministic for fixed (activity, duration, params): same seed, same bytes.
LabeledSeries synthesize(Activity activity, double duration_s, const SynthParams& params);

// Concatenated segments, one per activity in code order; per-segment noise
// streams are derived from the seed so segments are order-independent.
LabeledSeries synthesize_all(double duration_per_activity_s, const SynthParams& params);

}  // namespace har
