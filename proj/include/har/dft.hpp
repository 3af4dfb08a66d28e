#pragma once

#include <complex>
#include <span>
#include <vector>

#include "har/window.hpp"

namespace har {

// In-place radix-2 decimation-in-time FFT; size must be a power of two.
// Unnormalized forward transform: X_k = sum_n x_n * exp(-2*pi*i*k*n/N).
void fft_radix2(std::span<std::complex<double>> data);

// |X_k| for k = 0..7 of the window's unnormalized forward DFT.
std::array<double, kWindowSize> dft_magnitudes(const Window& w);

}  // namespace har
