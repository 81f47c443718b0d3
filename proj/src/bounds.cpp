// SPDX-License-Identifier: Apache-2.0

#include "kbnorm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "detail/parallel.hpp"
#include "detail/rng.hpp"
#include "kbnorm/errors.hpp"

namespace kbnorm {

namespace {

void require_modulus(double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("modulus must lie in [0, 1)");
}

std::string format_pair(double measured, double bound) {
  return std::to_string(measured) + " vs " + std::to_string(bound);
}

}  // namespace

BoundCoefficients bound_coefficients(int n, double r) {
  if (n < 2) throw std::invalid_argument("bracket coefficients need n >= 2");
  require_modulus(r);
  const double r4 = r * r * r * r;
  const double inner =
      1.0 + 5.0 * r4 - 4.0 * r4 / n - std::min(0.75, 2.0 / n);
  BoundCoefficients coefficients;
  coefficients.a_lower = std::sqrt(inner) / (1.0 + r);
  coefficients.A_upper = 1.0 + r + 1.0 / std::sqrt(static_cast<double>(n));
  coefficients.legacy_52 = 2.5 * n / (1.0 - r);
  return coefficients;
}

double n1_exact_norm(DiscPoint pole) {
  const double modulus = pole.modulus();
  return modulus * std::sqrt(1.0 / (1.0 - modulus * modulus));
}

double confluent_derivative_norm_squared(int n, double r) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  require_modulus(r);
  const double nm1 = n - 1.0;
  const double mid = (2.0 * n - 1.0) * r;
  const double top = n * r * r;
  const double denom = (1.0 - r * r) * (1.0 - r * r);
  return (nm1 * nm1 + mid * mid + top * top) / denom;
}

std::array<double, 3> phi_coefficients(int n, double r) {
  if (n < 2) throw std::invalid_argument("expansion needs n >= 2");
  if (!(r >= 0.0)) throw std::invalid_argument("modulus must be nonnegative");
  return {n - 1.0, (2.0 * n - 1.0) * r, n * r * r};
}

ExtremalCertificate extremal_certificate(int n, double r, int s) {
  require_modulus(r);
  const PoleConfiguration config =
      PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);
  const AnalyticFunction f = test_function(config, s);  // validates n, s

  ExtremalCertificate certificate;
  certificate.n = n;
  certificate.s = s;
  certificate.r = r;
  certificate.q =
      (n - s) + 2.0 * r * (n - s - 1.0) + r * r * (n - s - 2.0);
  const double terms = std::sqrt(s + 3.0);
  certificate.certified_lower =
      (std::sqrt(static_cast<double>(s)) * certificate.q -
       r * (1.0 + r) * terms) /
      ((1.0 - r * r) * terms);

  const double f_norm = space_norm(f, FunctionSpace::h2);
  certificate.f_norm_squared = f_norm * f_norm;
  certificate.measured =
      space_norm(derivative(f), FunctionSpace::h2) / f_norm;
  if (certificate.measured < certificate.certified_lower - tol::bound_slack)
    throw InvariantViolation(
        "measured derivative ratio fell below its certificate: " +
        format_pair(certificate.measured, certificate.certified_lower));
  return certificate;
}

DyakonovBracket dyakonov_bracket(const PoleConfiguration& config,
                                 int grid_size) {
  const double c = 2.0 * std::sqrt(3.0 * std::numbers::pi);
  const double lower_factor = 1.0 / (36.0 * c);
  const double upper_factor = (36.0 + c) / (2.0 * std::numbers::pi);
  int grid = grid_size;
  if (grid <= 0)
    grid = std::max(8192, QuadratureSpec::for_config(config).sample_count);
  grid = QuadratureSpec::round_up_to_grid(grid);

  DyakonovBracket bracket;
  bracket.sup_derivative = sup_norm_derivative_on_circle(config, grid);
  bracket.lower = lower_factor * bracket.sup_derivative;
  bracket.upper = upper_factor * bracket.sup_derivative;
  bracket.norm = operator_norm(config).norm;
  bracket.holds = bracket.norm >= bracket.lower - tol::bound_slack &&
                  bracket.norm <= bracket.upper + tol::bound_slack;
  return bracket;
}

BoundReport confluent_report(int n, double r) {
  const BoundCoefficients coefficients = bound_coefficients(n, r);
  const PoleConfiguration config =
      PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);

  BoundReport report;
  report.n = n;
  report.r = r;
  report.norm_confluent = operator_norm(config).norm;
  report.a_lower = coefficients.a_lower;
  report.A_upper = coefficients.A_upper;
  report.legacy_52 = coefficients.legacy_52;
  report.ratio = (1.0 - r) * report.norm_confluent / n;

  const double scale = n / (1.0 - r);
  const double element_norm =
      std::sqrt(confluent_derivative_norm_squared(n, r));
  if (report.norm_confluent > coefficients.A_upper * scale + tol::bound_slack)
    throw InvariantViolation(
        "confluent norm exceeded its upper coefficient bound: " +
        format_pair(report.norm_confluent, coefficients.A_upper * scale));
  if (report.norm_confluent > coefficients.legacy_52 + tol::bound_slack)
    throw InvariantViolation("confluent norm exceeded the 5/2 bound: " +
                             format_pair(report.norm_confluent,
                                         coefficients.legacy_52));
  if (element_norm < coefficients.a_lower * scale - tol::bound_slack)
    throw InvariantViolation(
        "last element derivative norm fell below the lower coefficient: " +
        format_pair(element_norm, coefficients.a_lower * scale));
  if (report.norm_confluent < element_norm - tol::bound_slack)
    throw InvariantViolation(
        "operator norm fell below the last diagonal entry: " +
        format_pair(report.norm_confluent, element_norm));
  return report;
}

std::vector<BoundReport> convergence_sweep(std::span<const int> n_list,
                                           std::span<const double> r_list,
                                           int threads) {
  if (n_list.empty() || r_list.empty())
    throw std::invalid_argument("sweep lists must be nonempty");
  std::vector<int> ns(n_list.begin(), n_list.end());
  std::vector<double> rs(r_list.begin(), r_list.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (int n : ns)
    if (n < 2) throw std::invalid_argument("sweep needs n >= 2");
  for (double r : rs)
    if (!(r >= 0.0 && r <= 0.95))
      throw std::invalid_argument("sweep needs r in [0, 0.95]");

  std::vector<BoundReport> reports(ns.size() * rs.size());
  detail::parallel_for(reports.size(), threads, [&](std::size_t cell) {
    const int n = ns[cell / rs.size()];
    const double r = rs[cell % rs.size()];
    reports[cell] = confluent_report(n, r);
  });
  return reports;
}

double randomized_configuration_max(int n, double r, int trials,
                                    std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("randomized study needs n >= 2");
  require_modulus(r);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const BoundCoefficients coefficients = bound_coefficients(n, r);
  const double scale = n / (1.0 - r);

  const auto checked_norm = [&](const PoleConfiguration& config) {
    const double norm = operator_norm(config).norm;
    if (norm > coefficients.A_upper * scale + tol::bound_slack)
      throw InvariantViolation(
          "sampled norm exceeded its upper coefficient bound: " +
          format_pair(norm, coefficients.A_upper * scale));
    if (norm > coefficients.legacy_52 + tol::bound_slack)
      throw InvariantViolation("sampled norm exceeded the 5/2 bound: " +
                               format_pair(norm, coefficients.legacy_52));
    return norm;
  };

  double best = checked_norm(
      PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n));
  best = std::max(best, checked_norm(PoleConfiguration::confluent(
                      DiscPoint(Complex(0.0, 0.0)), n)));
  detail::DeterministicRng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<DiscPoint> poles;
    poles.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) poles.emplace_back(rng.in_disc(r));
    best = std::max(best, checked_norm(PoleConfiguration(poles)));
  }
  return best;
}

std::vector<EmbeddingRecord> embedding_ratio_sweep(
    FunctionSpace space, double s, std::span<const int> n_list,
    std::span<const double> r_list, int trials, std::uint64_t seed) {
  if (space != FunctionSpace::besov && space != FunctionSpace::wiener)
    throw std::invalid_argument("embedding study covers Besov and Wiener");
  if (space == FunctionSpace::besov && !(s >= 0.0))
    throw std::invalid_argument("Besov smoothness must be nonnegative");
  if (n_list.empty() || r_list.empty())
    throw std::invalid_argument("sweep lists must be nonempty");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  std::vector<int> ns(n_list.begin(), n_list.end());
  std::vector<double> rs(r_list.begin(), r_list.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (int n : ns)
    if (n < 1) throw std::invalid_argument("embedding study needs n >= 1");
  for (double r : rs) require_modulus(r);

  std::vector<EmbeddingRecord> records;
  records.reserve(ns.size() * rs.size());
  std::uint64_t cell_index = 0;
  for (int n : ns) {
    for (double r : rs) {
      const PoleConfiguration config =
          PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);
      const MalmquistWalshBasis basis(config,
                                      QuadratureSpec::for_config(config));
      const Eigen::MatrixXcd& coefficients = basis.coefficient_matrix();
      const int m = basis.spec().sample_count;

      Eigen::VectorXd weights;
      if (space == FunctionSpace::besov) {
        weights.resize(m);
        for (int k = 0; k < m; ++k)
          weights(k) = std::pow(static_cast<double>(k + 1), 2.0 * s);
      }

      detail::DeterministicRng rng(seed + 0x9e3779b97f4a7c15ULL * ++cell_index);
      double max_ratio = 0.0;
      for (int trial = 0; trial < trials; ++trial) {
        Eigen::VectorXcd coords(n);
        for (int k = 0; k < n; ++k) coords(k) = rng.normal();
        const Eigen::VectorXcd f = coefficients * coords;
        const double h2 = f.norm();
        double value = 0.0;
        if (space == FunctionSpace::wiener)
          value = f.cwiseAbs().sum();
        else
          value = std::sqrt(weights.dot(f.cwiseAbs2()));
        max_ratio = std::max(max_ratio, value / h2);
      }

      EmbeddingRecord record;
      record.space = space;
      record.s = space == FunctionSpace::besov ? s : 0.0;
      record.n = n;
      record.r = r;
      record.trials = trials;
      record.max_ratio = max_ratio;
      const double growth =
          space == FunctionSpace::besov
              ? std::pow(n / (1.0 - r), s)
              : std::sqrt(static_cast<double>(n) * n / (1.0 - r));
      record.normalized = max_ratio / growth;
      if (!std::isfinite(record.max_ratio) ||
          !std::isfinite(record.normalized))
        throw InvariantViolation("embedding ratio is not finite");
      records.push_back(record);
    }
  }
  return records;
}

}  // namespace kbnorm
