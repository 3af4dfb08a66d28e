#include "har/median_filter.hpp"

#include <algorithm>
#include <stdexcept>

namespace har {
namespace {

void check_width(int width) {
    if (width < 1 || width % 2 == 0)
        throw std::invalid_argument("median filter width must be odd and positive");
}

}  // namespace

std::vector<double> median_filter(std::span<const double> values, int width) {
    check_width(width);
    const std::size_t n = values.size();
    if (n == 0) return {};
    if (static_cast<std::size_t>(width) > 2 * n - 1)
        throw std::invalid_argument("median filter width exceeds 2*length-1");

    const int half = width / 2;
    std::vector<double> out(n);
    std::vector<double> window(static_cast<std::size_t>(width));
    for (std::size_t i = 0; i < n; ++i) {
        for (int off = -half; off <= half; ++off) {
            long j = static_cast<long>(i) + off;
            j = std::clamp<long>(j, 0, static_cast<long>(n) - 1);
            window[static_cast<std::size_t>(off + half)] = values[static_cast<std::size_t>(j)];
        }
        auto mid = window.begin() + half;
        std::nth_element(window.begin(), mid, window.end());
        out[i] = *mid;
    }
    return out;
}

StreamingMedianFilter::StreamingMedianFilter(int width) : width_(width), half_(width / 2) {
    check_width(width);
    buffer_.reserve(static_cast<std::size_t>(width));
}

double StreamingMedianFilter::median_of_buffer() const {
    // Median for output position `emitted_`, clamping indices to what has
    // been seen so far; buffer_ holds raw samples [seen_-buffer_.size(), seen_).
    const std::size_t start = seen_ - buffer_.size();
    std::vector<double> window;
    window.reserve(static_cast<std::size_t>(width_));
    for (int off = -half_; off <= half_; ++off) {
        long j = static_cast<long>(emitted_) + off;
        j = std::clamp<long>(j, 0, static_cast<long>(seen_) - 1);
        window.push_back(buffer_[static_cast<std::size_t>(j) - start]);
    }
    auto mid = window.begin() + half_;
    std::nth_element(window.begin(), mid, window.end());
    return *mid;
}

std::vector<double> StreamingMedianFilter::push(double value) {
    if (buffer_.size() == static_cast<std::size_t>(width_)) buffer_.erase(buffer_.begin());
    buffer_.push_back(value);
    ++seen_;
    std::vector<double> out;
    if (seen_ >= emitted_ + static_cast<std::size_t>(half_) + 1) {
        out.push_back(median_of_buffer());
        ++emitted_;
    }
    return out;
}

std::vector<double> StreamingMedianFilter::finish() {
    std::vector<double> out;
    while (emitted_ < seen_) {
        out.push_back(median_of_buffer());
        ++emitted_;
    }
    return out;
}

}  // namespace har
