// SPDX-License-Identifier: Apache-2.0

#include "kbnorm/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "detail/fft.hpp"
#include "detail/summation.hpp"
#include "kbnorm/errors.hpp"

namespace kbnorm {

namespace {

int next_power_of_two(int value) {
  int m = 1;
  while (m < value) m <<= 1;
  return m;
}

}  // namespace

QuadratureSpec QuadratureSpec::for_config(int degree, double max_modulus) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (!(max_modulus >= 0.0 && max_modulus < 1.0))
    throw std::invalid_argument("max modulus must lie in [0, 1)");
  const double needed = quadrature_policy::samples_per_unit *
                        static_cast<double>(degree) / (1.0 - max_modulus);
  const int floor_size = quadrature_policy::min_samples;
  QuadratureSpec spec;
  spec.sample_count = next_power_of_two(
      std::max(floor_size, static_cast<int>(std::ceil(needed))));
  return spec;
}

QuadratureSpec QuadratureSpec::for_config(const PoleConfiguration& config) {
  return for_config(config.degree(), config.max_modulus());
}

int QuadratureSpec::round_up_to_grid(int requested) {
  return next_power_of_two(std::max(quadrature_policy::min_grid, requested));
}

void QuadratureSpec::validate() const {
  if (sample_count < quadrature_policy::min_grid ||
      !detail::is_power_of_two(static_cast<std::size_t>(sample_count)))
    throw std::invalid_argument(
        "sample count must be a power of two, at least 64");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
}

AnalyticFunction AnalyticFunction::from_samples(std::vector<Complex> samples,
                                                Evaluator evaluator,
                                                double tolerance,
                                                double decay_radius) {
  const std::size_t m = samples.size();
  if (!detail::is_power_of_two(m) ||
      m < static_cast<std::size_t>(quadrature_policy::min_grid))
    throw std::invalid_argument(
        "sample count must be a power of two, at least 64");
  double peak = 0.0;
  for (const Complex& v : samples) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw EvaluationError("function is not finite on the circle grid");
    peak = std::max(peak, std::abs(v));
  }
  detail::fft(samples, -1);
  const double scale = 1.0 / static_cast<double>(m);
  for (Complex& c : samples) c *= scale;
  // Bins in the upper half alias the negative frequencies; anything
  // significant there means the input is not analytic in the disc (or the
  // grid is too small for its coefficient decay).
  double worst = 0.0;
  for (std::size_t k = m / 2; k < m; ++k)
    worst = std::max(worst, std::abs(samples[k]));
  if (worst > tolerance * std::max(1.0, peak))
    throw AnalyticityError(
        "negative-frequency content " + std::to_string(worst) +
        " exceeds tolerance; function is not analytic at this grid size");
  AnalyticFunction f;
  f.evaluator_ = std::move(evaluator);
  f.taylor_ = std::move(samples);
  f.decay_radius_ = decay_radius;
  if (decay_radius > 1.0) {
    const double q = 1.0 / decay_radius;
    f.aliasing_bound_ =
        peak * std::pow(q, static_cast<double>(m)) / (1.0 - q);
  }
  return f;
}

AnalyticFunction AnalyticFunction::from_coefficients(
    std::vector<Complex> coefficients, double decay_radius) {
  const std::size_t m = coefficients.size();
  if (!detail::is_power_of_two(m) ||
      m < static_cast<std::size_t>(quadrature_policy::min_grid))
    throw std::invalid_argument(
        "coefficient count must be a power of two, at least 64");
  AnalyticFunction f;
  f.taylor_ = std::move(coefficients);
  f.decay_radius_ = decay_radius;
  return f;
}

Complex AnalyticFunction::eval(Complex z) const {
  if (evaluator_) return evaluator_(z);
  Complex acc = 0.0;
  for (std::size_t k = taylor_.size(); k-- > 0;) acc = acc * z + taylor_[k];
  return acc;
}

std::vector<Complex> AnalyticFunction::circle_samples() const {
  std::vector<Complex> samples = taylor_;
  detail::fft(samples, +1);
  return samples;
}

AnalyticFunction analyze(const Evaluator& evaluator, const QuadratureSpec& spec,
                         double decay_radius) {
  spec.validate();
  if (!evaluator) throw std::invalid_argument("evaluator must be callable");
  const int m = spec.sample_count;
  std::vector<Complex> samples(static_cast<std::size_t>(m));
  const double step = 2.0 * std::numbers::pi / m;
  for (int i = 0; i < m; ++i)
    samples[static_cast<std::size_t>(i)] = evaluator(std::polar(1.0, step * i));
  return AnalyticFunction::from_samples(std::move(samples), evaluator,
                                        spec.tolerance, decay_radius);
}

namespace {

// Zero-pads a coefficient-backed function or re-analyzes an evaluator-backed
// one at the larger grid.
AnalyticFunction resample(const AnalyticFunction& f, int samples) {
  if (f.has_evaluator()) {
    QuadratureSpec spec;
    spec.sample_count = samples;
    return analyze([&f](Complex z) { return f.eval(z); }, spec,
                   f.decay_radius());
  }
  std::vector<Complex> padded = f.taylor();
  padded.resize(static_cast<std::size_t>(samples), Complex{0.0, 0.0});
  return AnalyticFunction::from_coefficients(std::move(padded),
                                             f.decay_radius());
}

Complex coefficient_inner(const std::vector<Complex>& a,
                          const std::vector<Complex>& b) {
  return detail::pairwise_sum<Complex>(
      0, a.size(), [&](std::size_t k) { return a[k] * std::conj(b[k]); });
}

}  // namespace

Complex inner_product(const AnalyticFunction& f, const AnalyticFunction& g) {
  if (f.sample_count() == g.sample_count())
    return coefficient_inner(f.taylor(), g.taylor());
  if (f.sample_count() < g.sample_count())
    return coefficient_inner(resample(f, g.sample_count()).taylor(),
                             g.taylor());
  return coefficient_inner(f.taylor(),
                           resample(g, f.sample_count()).taylor());
}

Complex szego_kernel(Complex pole, Complex z) {
  return 1.0 / (1.0 - std::conj(pole) * z);
}

Complex szego_inner_oracle(DiscPoint a, DiscPoint b) {
  return 1.0 / (1.0 - std::conj(a.value()) * b.value());
}

double space_norm(const AnalyticFunction& f, FunctionSpace space, double s) {
  const std::vector<Complex>& c = f.taylor();
  switch (space) {
    case FunctionSpace::h2:
      return std::sqrt(detail::pairwise_sum<double>(
          0, c.size(), [&](std::size_t k) { return std::norm(c[k]); }));
    case FunctionSpace::wiener:
      return detail::pairwise_sum<double>(
          0, c.size(), [&](std::size_t k) { return std::abs(c[k]); });
    case FunctionSpace::besov: {
      return std::sqrt(detail::pairwise_sum<double>(
          0, c.size(), [&](std::size_t k) {
            return std::pow(static_cast<double>(k + 1), 2.0 * s) *
                   std::norm(c[k]);
          }));
    }
    case FunctionSpace::h1: {
      const std::vector<Complex> samples = f.circle_samples();
      const double total = detail::pairwise_sum<double>(
          0, samples.size(),
          [&](std::size_t m) { return std::abs(samples[m]); });
      return total / static_cast<double>(samples.size());
    }
  }
  throw std::invalid_argument("unknown function space");
}

AnalyticFunction derivative(const AnalyticFunction& f) {
  const std::vector<Complex>& c = f.taylor();
  std::vector<Complex> shifted(c.size(), Complex{0.0, 0.0});
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    shifted[k] = static_cast<double>(k + 1) * c[k + 1];
  return AnalyticFunction::from_coefficients(std::move(shifted),
                                             f.decay_radius());
}

}  // namespace kbnorm
