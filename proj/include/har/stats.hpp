#pragma once

#include <span>

namespace har {

// The seven per-window statistics. Population (1/n) forms throughout;
// kurtosis and skewness use the n-weighted moment ratios and are defined
// as 0 for a constant window.
struct WindowStats {
    double mean = 0.0;
    double variance = 0.0;
    double stddev = 0.0;
    double iqr = 0.0;
    double kurtosis = 0.0;
    double skewness = 0.0;
    double energy = 0.0;
};

// Q3 - Q1 with quartiles by Tukey hinges: split the sorted values into
// lower/upper halves (median included in both when n is odd); Q1/Q3 are
// the medians of the halves.
double interquartile_range(std::span<const double> values);

WindowStats window_statistics(std::span<const double> values);

}  // namespace har
