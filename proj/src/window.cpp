#include "har/window.hpp"

#include <algorithm>
#include <stdexcept>

namespace har {

Activity majority_label(std::span<const Activity> labels) {
    if (labels.empty()) throw std::invalid_argument("majority_label: empty label set");
    std::array<int, kActivityCount> counts{};
    for (Activity a : labels) counts[static_cast<std::size_t>(activity_code(a))]++;
    int best = 0;
    for (int c = 1; c < kActivityCount; ++c)
        if (counts[static_cast<std::size_t>(c)] > counts[static_cast<std::size_t>(best)]) best = c;
    return static_cast<Activity>(best);
}

std::vector<WindowTriple> window_triples(std::span<const double> x, std::span<const double> y,
                                         std::span<const double> z,
                                         std::span<const Activity> labels, int stride) {
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");
    if (x.size() != y.size() || y.size() != z.size())
        throw std::invalid_argument("axis lengths differ");
    if (!labels.empty() && labels.size() != x.size())
        throw std::invalid_argument("labels length does not match samples length");

    std::vector<WindowTriple> out;
    const std::size_t n = x.size();
    for (std::size_t start = 0; start + kWindowSize <= n; start += static_cast<std::size_t>(stride)) {
        WindowTriple t;
        for (int i = 0; i < kWindowSize; ++i) {
            const std::size_t j = start + static_cast<std::size_t>(i);
            t.wx[static_cast<std::size_t>(i)] = x[j];
            t.wy[static_cast<std::size_t>(i)] = y[j];
            t.wz[static_cast<std::size_t>(i)] = z[j];
        }
        if (!labels.empty()) t.label = majority_label(labels.subspan(start, kWindowSize));
        out.push_back(t);
    }
    return out;
}

std::vector<WindowTriple> window_triples(const LabeledSeries& series, int stride) {
    const auto x = series.axis(0);
    const auto y = series.axis(1);
    const auto z = series.axis(2);
    return window_triples(x, y, z, series.labels, stride);
}

}  // namespace har
