// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_DETAIL_FFT_HPP_
#define KBNORM_DETAIL_FFT_HPP_

#include <complex>
#include <numbers>
#include <vector>

namespace kbnorm::detail {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 transform, size a power of two. sign = -1 analyzes
// (X_k = sum_m x_m w^{-km}), sign = +1 synthesizes; neither scales, the
// caller divides by the length where needed.
inline void fft(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::complex<double>> twiddle(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::size_t half = len / 2;
    for (std::size_t j = 0; j < half; ++j)
      twiddle[j] = std::polar(1.0, step * static_cast<double>(j));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + half] * twiddle[j];
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
}

}  // namespace kbnorm::detail

#endif  // KBNORM_DETAIL_FFT_HPP_
