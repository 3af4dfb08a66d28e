#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "har/activity.hpp"

namespace har {

inline constexpr double kDefaultSampleRateHz = 250.0;

struct Sample {
    double ax = 0.0;
    double ay = 0.0;
    double az = 0.0;

    bool finite() const {
        return std::isfinite(ax) && std::isfinite(ay) && std::isfinite(az);
    }
    bool operator==(const Sample&) const = default;
};

// Time-ordered triaxial samples, optionally labeled per sample.
struct LabeledSeries {
    std::vector<Sample> samples;
    std::vector<Activity> labels;  // empty or same length as samples
    double sample_rate_hz = kDefaultSampleRateHz;

    std::size_t size() const { return samples.size(); }
    bool labeled() const { return !labels.empty(); }

    void validate() const {
        if (labeled() && labels.size() != samples.size())
            throw std::invalid_argument("labels length does not match samples length");
        if (!(sample_rate_hz > 0.0))
            throw std::invalid_argument("sample_rate_hz must be positive");
    }

    std::vector<double> axis(int idx) const {
        std::vector<double> out;
        out.reserve(samples.size());
        for (const Sample& s : samples)
            out.push_back(idx == 0 ? s.ax : idx == 1 ? s.ay : s.az);
        return out;
    }

    bool operator==(const LabeledSeries&) const = default;
};

}  // namespace har
