// SPDX-License-Identifier: Apache-2.0

#include "kbnorm/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kbnorm/errors.hpp"
#include "kbnorm/tolerances.hpp"

namespace kbnorm {

namespace {

void require_on_closed_disc(Complex z) {
  if (!(std::abs(z) <= 1.0 + tol::circle_slack))
    throw std::domain_error("evaluation point outside the closed unit disc");
}

Complex factor_denominator(Complex pole, Complex z) {
  const Complex denom = 1.0 - std::conj(pole) * z;
  if (std::abs(denom) < tol::pole_denominator)
    throw EvaluationError("evaluation point coincides with a reflected pole");
  return denom;
}

template <class F>
double golden_section_max(const F& f, double lo, double hi, int iterations) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iterations; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

DiscPoint::DiscPoint(Complex value) : value_(value) {
  if (!(std::abs(value) < 1.0))
    throw std::invalid_argument("pole modulus must be strictly less than 1");
}

PoleConfiguration::PoleConfiguration(const std::vector<DiscPoint>& poles) {
  if (poles.empty())
    throw std::invalid_argument("a pole configuration needs at least one pole");
  poles_.reserve(poles.size());
  max_modulus_ = 0.0;
  for (const DiscPoint& p : poles) {
    poles_.push_back(p.value());
    max_modulus_ = std::max(max_modulus_, p.modulus());
  }
}

PoleConfiguration PoleConfiguration::confluent(DiscPoint pole, int count) {
  if (count < 1) throw std::invalid_argument("confluent count must be >= 1");
  return PoleConfiguration(
      std::vector<DiscPoint>(static_cast<std::size_t>(count), pole));
}

bool PoleConfiguration::is_confluent() const {
  return std::all_of(poles_.begin(), poles_.end(),
                     [&](Complex p) { return p == poles_.front(); });
}

Complex blaschke_factor(Complex pole, Complex z) {
  return (pole - z) / factor_denominator(pole, z);
}

Complex blaschke_factor_derivative(Complex pole, Complex z) {
  const Complex denom = factor_denominator(pole, z);
  return (std::norm(pole) - 1.0) / (denom * denom);
}

BlaschkeProduct::BlaschkeProduct(PoleConfiguration config)
    : config_(std::move(config)) {}

Complex BlaschkeProduct::eval(Complex z) const {
  require_on_closed_disc(z);
  Complex product = 1.0;
  for (Complex pole : config_.poles()) product *= blaschke_factor(pole, z);
  return product;
}

Complex BlaschkeProduct::derivative(Complex z) const {
  require_on_closed_disc(z);
  const auto& poles = config_.poles();
  const std::size_t n = poles.size();
  // prefix[i] = prod_{j<i} b_j, suffix[i] = prod_{j>=i} b_j
  std::vector<Complex> prefix(n + 1), suffix(n + 1);
  prefix[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    prefix[i + 1] = prefix[i] * blaschke_factor(poles[i], z);
  suffix[n] = 1.0;
  for (std::size_t i = n; i-- > 0;)
    suffix[i] = blaschke_factor(poles[i], z) * suffix[i + 1];
  Complex sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    sum += blaschke_factor_derivative(poles[i], z) * prefix[i] * suffix[i + 1];
  return sum;
}

double sup_norm_derivative_on_circle(const PoleConfiguration& config,
                                     int grid_size) {
  if (grid_size < quadrature_policy::min_grid)
    throw std::invalid_argument("grid size must be at least " +
                                std::to_string(quadrature_policy::min_grid));
  const BlaschkeProduct product(config);
  const auto magnitude = [&](double theta) {
    return std::abs(product.derivative(std::polar(1.0, theta)));
  };
  const double step = 2.0 * std::numbers::pi / grid_size;
  std::vector<double> values(static_cast<std::size_t>(grid_size));
  for (int m = 0; m < grid_size; ++m)
    values[static_cast<std::size_t>(m)] = magnitude(step * m);

  double best = *std::max_element(values.begin(), values.end());
  // Refine around the three leading local maxima; enough to keep the result
  // nondecreasing on doubling grids even when peaks compete.
  std::vector<int> candidates;
  for (int m = 0; m < grid_size; ++m) {
    const double left = values[static_cast<std::size_t>(
        (m + grid_size - 1) % grid_size)];
    const double right = values[static_cast<std::size_t>((m + 1) % grid_size)];
    const double here = values[static_cast<std::size_t>(m)];
    if (here >= left && here >= right) candidates.push_back(m);
  }
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] >
           values[static_cast<std::size_t>(b)];
  });
  if (candidates.size() > 3) candidates.resize(3);
  for (int m : candidates) {
    const double center = step * m;
    best = std::max(best,
                    golden_section_max(magnitude, center - step, center + step,
                                       80));
  }
  return best;
}

}  // namespace kbnorm
