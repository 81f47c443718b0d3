// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_HARDY_HPP_
#define KBNORM_HARDY_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "kbnorm/blaschke.hpp"
#include "kbnorm/tolerances.hpp"

namespace kbnorm {

// Uniform circle quadrature: samples at the M-th roots of unity with M a
// power of two, M >= 64. The normalized measure is used throughout, so
// ||z^k||_2 = 1 for every k.
struct QuadratureSpec {
  int sample_count = quadrature_policy::min_samples;
  double tolerance = tol::analyticity;

  // Smallest power of two >= max(4096, 64 n/(1-r)).
  static QuadratureSpec for_config(int degree, double max_modulus);
  static QuadratureSpec for_config(const PoleConfiguration& config);
  static int round_up_to_grid(int requested);

  void validate() const;
};

using Evaluator = std::function<Complex(Complex)>;

enum class FunctionSpace { h2, h1, wiener, besov };

// Disc-analytic function exposed as an evaluator plus Taylor coefficients
// recovered by the DFT of uniform circle samples. Truncation length equals
// the sample count.
class AnalyticFunction {
 public:
  // Runs the DFT on supplied circle samples and keeps every bin as a Taylor
  // coefficient after checking that the negative-frequency half is below
  // tolerance * max(1, peak sample).
  static AnalyticFunction from_samples(std::vector<Complex> samples,
                                       Evaluator evaluator, double tolerance,
                                       double decay_radius);
  // The function is the polynomial with these coefficients; size must be a
  // power of two >= 64.
  static AnalyticFunction from_coefficients(std::vector<Complex> coefficients,
                                            double decay_radius = 0.0);

  Complex eval(Complex z) const;
  const std::vector<Complex>& taylor() const { return taylor_; }
  int sample_count() const { return static_cast<int>(taylor_.size()); }
  double decay_radius() const { return decay_radius_; }
  // Recorded bound on the aliasing error of each coefficient, available when
  // the decay radius is known.
  std::optional<double> aliasing_bound() const { return aliasing_bound_; }
  bool has_evaluator() const { return static_cast<bool>(evaluator_); }
  // Samples synthesized from the coefficients at the roots of unity.
  std::vector<Complex> circle_samples() const;

 private:
  AnalyticFunction() = default;

  Evaluator evaluator_;
  std::vector<Complex> taylor_;
  double decay_radius_ = 0.0;
  std::optional<double> aliasing_bound_;
};

// Samples the evaluator on the circle grid and extracts Taylor coefficients.
// Throws AnalyticityError if any negative-frequency bin exceeds tolerance.
AnalyticFunction analyze(const Evaluator& evaluator, const QuadratureSpec& spec,
                         double decay_radius = 0.0);

// (f, g) = sum_k f^(k) conj(g^(k)); conjugate-linear in the second argument.
// Functions analyzed at different sample counts are resampled to the max.
Complex inner_product(const AnalyticFunction& f, const AnalyticFunction& g);

// Reproducing kernel k_l(z) = 1/(1 - conj(l) z).
Complex szego_kernel(Complex pole, Complex z);

// Closed form (k_a, k_b) = 1/(1 - conj(a) b), the independent oracle for
// inner_product.
Complex szego_inner_oracle(DiscPoint a, DiscPoint b);

// h2:     l2 norm of the coefficients
// h1:     mean of |f| over the circle grid
// wiener: l1 norm of the coefficients
// besov:  weighted l2 with weights (k+1)^(2s); s = 0 recovers h2
double space_norm(const AnalyticFunction& f, FunctionSpace space,
                  double s = 0.0);

// Coefficient shift g^(k) = (k+1) f^(k+1).
AnalyticFunction derivative(const AnalyticFunction& f);

}  // namespace kbnorm

#endif  // KBNORM_HARDY_HPP_
