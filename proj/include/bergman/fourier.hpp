#pragma once

#include <vector>

#include "bergman/common.hpp"

namespace bergman {

/// Forward DFT with 1/M normalization:
///   modes[m] = (1/M) sum_j samples[j] exp(-2 pi i m j / M).
/// Radix-2 FFT when M is a power of two, direct summation otherwise.
std::vector<Complex> dft_forward(const std::vector<Complex>& samples);

/// Inverse of dft_forward (no normalization factor):
///   samples[j] = sum_m modes[m] exp(+2 pi i m j / M).
std::vector<Complex> dft_inverse(const std::vector<Complex>& modes);

}  // namespace bergman
