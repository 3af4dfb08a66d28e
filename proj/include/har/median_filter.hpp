#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace har {

// Centered median filter with clamped (boundary-replicating) edges. Output
// length equals input length; width must be odd and positive.
std::vector<double> median_filter(std::span<const double> values, int width);

// Streaming variant with the same edge semantics as the batch filter: the
// head is clamped as values arrive, the tail on finish(). Feeding a whole
// sequence through push()+finish() reproduces median_filter() exactly.
class StreamingMedianFilter {
public:
    explicit StreamingMedianFilter(int width);

    // Returns the filtered values that became available with this sample.
    std::vector<double> push(double value);

    // Flushes the trailing half-window. Call exactly once, at end of stream.
    std::vector<double> finish();

    int width() const { return width_; }

private:
    double median_of_buffer() const;

    int width_;
    int half_;
    std::size_t seen_ = 0;     // samples pushed
    std::size_t emitted_ = 0;  // filtered values produced
    std::vector<double> buffer_;  // last <= width samples, oldest first
};

}  // namespace har
