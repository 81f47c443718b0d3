// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_DETAIL_RNG_HPP_
#define KBNORM_DETAIL_RNG_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace kbnorm::detail {

// mt19937_64 with explicit mappings instead of std distributions, so that a
// seed produces the same stream on every platform.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Area-uniform draw from the closed disc of the given radius.
  std::complex<double> in_disc(double radius) {
    const double modulus = radius * std::sqrt(uniform01());
    const double angle = 2.0 * std::numbers::pi * uniform01();
    return std::polar(modulus, angle);
  }

  std::complex<double> on_circle() {
    return std::polar(1.0, 2.0 * std::numbers::pi * uniform01());
  }

  // Box-Muller; complex standard normal.
  std::complex<double> normal() {
    double u = uniform01();
    while (u <= 0.0) u = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * uniform01();
    return std::polar(radius, angle);
  }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kbnorm::detail

#endif  // KBNORM_DETAIL_RNG_HPP_
