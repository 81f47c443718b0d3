// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_BLASCHKE_HPP_
#define KBNORM_BLASCHKE_HPP_

#include <complex>
#include <vector>

namespace kbnorm {

using Complex = std::complex<double>;

// A point of the open unit disc; construction rejects |value| >= 1.
class DiscPoint {
 public:
  explicit DiscPoint(Complex value);
  Complex value() const { return value_; }
  double modulus() const { return std::abs(value_); }

 private:
  Complex value_;
};

// Ordered pole list; repetition encodes multiplicity. The max modulus is
// always recomputed from the poles, never user supplied.
class PoleConfiguration {
 public:
  explicit PoleConfiguration(const std::vector<DiscPoint>& poles);
  static PoleConfiguration confluent(DiscPoint pole, int count);

  int degree() const { return static_cast<int>(poles_.size()); }
  double max_modulus() const { return max_modulus_; }
  const std::vector<Complex>& poles() const { return poles_; }
  bool is_confluent() const;

 private:
  std::vector<Complex> poles_;
  double max_modulus_;
};

// Elementary factor b_l(z) = (l - z)/(1 - conj(l) z) and its derivative
// (|l|^2 - 1)/(1 - conj(l) z)^2.
Complex blaschke_factor(Complex pole, Complex z);
Complex blaschke_factor_derivative(Complex pole, Complex z);

// Finite product of elementary factors: |B| = 1 on the circle and
// B(l_i) = 0 at every pole of the configuration.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(PoleConfiguration config);

  Complex eval(Complex z) const;
  // Product-rule accumulation sum_i b_i' prod_{j != i} b_j; stays finite at
  // the zeros of B, unlike the logarithmic-derivative form.
  Complex derivative(Complex z) const;

  const PoleConfiguration& config() const { return config_; }

 private:
  PoleConfiguration config_;
};

// Max of |B'| over a uniform circle grid, followed by a golden-section pass
// around the leading grid maximizers. The result is a lower estimate of the
// true sup norm; |B'| is smooth on the circle, so the grid policy only needs
// to resolve peaks of width about (1 - r).
double sup_norm_derivative_on_circle(const PoleConfiguration& config,
                                     int grid_size);

}  // namespace kbnorm

#endif  // KBNORM_BLASCHKE_HPP_
