#include "har/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "har/window.hpp"

namespace har {
namespace {

double median_sorted(std::span<const double> s) {
    const std::size_t n = s.size();
    return n % 2 == 1 ? s[n / 2] : 0.5 * (s[n / 2 - 1] + s[n / 2]);
}

}  // namespace

double interquartile_range(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t half = (n + 1) / 2;  // odd n keeps the median in both halves
    const double q1 = median_sorted(std::span(sorted).first(half));
    const double q3 = median_sorted(std::span(sorted).last(half));
    return q3 - q1;
}

WindowStats window_statistics(std::span<const double> values) {
    if (values.size() != static_cast<std::size_t>(kWindowSize))
        throw std::invalid_argument("window_statistics expects exactly 8 values");
    const auto n = static_cast<double>(values.size());

    WindowStats s;
    double sum = 0.0, sum_sq = 0.0;
    for (double v : values) {
        sum += v;
        sum_sq += v * v;
    }
    s.mean = sum / n;
    s.energy = sum_sq / n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;  // sums of centered powers
    for (double v : values) {
        const double d = v - s.mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    s.variance = m2 / n;
    s.stddev = std::sqrt(s.variance);
    if (m2 > 0.0) {
        s.kurtosis = n * m4 / (m2 * m2);
        s.skewness = std::sqrt(n) * m3 / std::pow(m2, 1.5);
    }
    s.iqr = interquartile_range(values);
    return s;
}

}  // namespace har
