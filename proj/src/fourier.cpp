#include "bergman/fourier.hpp"

#include <stdexcept>
#include <utility>

namespace bergman {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative in-place Cooley-Tukey, sign = -1 forward / +1 inverse.
void fft_pow2(std::vector<Complex>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    const Complex wstep = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      Complex w{1.0, 0.0};
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wstep;
      }
    }
  }
}

std::vector<Complex> dft_direct(const std::vector<Complex>& in, int sign) {
  const std::size_t n = in.size();
  std::vector<Complex> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    CompensatedComplexSum acc;
    for (std::size_t j = 0; j < n; ++j) {
      const double ang =
          sign * 2.0 * kPi * static_cast<double>(m) * static_cast<double>(j) /
          static_cast<double>(n);
      acc.add(in[j] * std::polar(1.0, ang));
    }
    out[m] = acc.value();
  }
  return out;
}

}  // namespace

std::vector<Complex> dft_forward(const std::vector<Complex>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("dft_forward: need at least 2 samples");
  std::vector<Complex> out;
  if (is_pow2(samples.size())) {
    out = samples;
    fft_pow2(out, -1);
  } else {
    out = dft_direct(samples, -1);
  }
  const double inv = 1.0 / static_cast<double>(samples.size());
  for (auto& v : out) v *= inv;
  return out;
}

std::vector<Complex> dft_inverse(const std::vector<Complex>& modes) {
  if (modes.size() < 2)
    throw std::invalid_argument("dft_inverse: need at least 2 modes");
  if (is_pow2(modes.size())) {
    std::vector<Complex> out = modes;
    fft_pow2(out, +1);
    return out;
  }
  return dft_direct(modes, +1);
}

}  // namespace bergman
