#include "har/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace har {

void fft_radix2(std::span<std::complex<double>> data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft size must be a power of two");

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::array<double, kWindowSize> dft_magnitudes(const Window& w) {
    std::array<std::complex<double>, kWindowSize> buf;
    for (int i = 0; i < kWindowSize; ++i) buf[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
    fft_radix2(buf);
    std::array<double, kWindowSize> mags{};
    for (int i = 0; i < kWindowSize; ++i) mags[static_cast<std::size_t>(i)] = std::abs(buf[static_cast<std::size_t>(i)]);
    return mags;
}

}  // namespace har
