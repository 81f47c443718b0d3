// SPDX-License-Identifier: Apache-2.0

#include "kbnorm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <vector>

#include "detail/rng.hpp"
#include "kbnorm/bounds.hpp"
#include "kbnorm/errors.hpp"

namespace kbnorm {

namespace {

std::string sci(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.3e", value);
  return buffer;
}

PoleConfiguration random_configuration(detail::DeterministicRng& rng,
                                       int min_degree, int max_degree,
                                       double max_modulus) {
  const int span = max_degree - min_degree + 1;
  int n = min_degree + static_cast<int>(rng.uniform01() * span);
  n = std::clamp(n, min_degree, max_degree);
  std::vector<DiscPoint> poles;
  poles.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) poles.emplace_back(rng.in_disc(max_modulus));
  return PoleConfiguration(poles);
}

Eigen::VectorXcd random_coordinates(detail::DeterministicRng& rng, int n) {
  Eigen::VectorXcd coords(n);
  for (int k = 0; k < n; ++k) coords(k) = rng.normal();
  return coords;
}

Eigen::VectorXcd shift_derivative(const Eigen::VectorXcd& coefficients) {
  const Eigen::Index m = coefficients.size();
  Eigen::VectorXcd shifted = Eigen::VectorXcd::Zero(m);
  for (Eigen::Index k = 0; k + 1 < m; ++k)
    shifted(k) = static_cast<double>(k + 1) * coefficients(k + 1);
  return shifted;
}

CheckResult check_blaschke_unimodular() {
  detail::DeterministicRng rng(101);
  double worst = 0.0;
  for (int c = 0; c < 8; ++c) {
    const BlaschkeProduct product(random_configuration(rng, 1, 8, 0.9));
    for (int i = 0; i < 128; ++i) {
      const double value = std::abs(product.eval(rng.on_circle()));
      worst = std::max(worst, std::abs(value - 1.0));
    }
  }
  return {"blaschke_unimodular_on_circle", worst <= tol::unimodularity,
          "worst | |B|-1 | = " + sci(worst)};
}

CheckResult check_blaschke_derivative_fd() {
  detail::DeterministicRng rng(102);
  double worst = 0.0;
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const BlaschkeProduct product(random_configuration(rng, 1, 6, 0.85));
    const Complex z = rng.in_disc(0.9);
    const Complex exact = product.derivative(z);
    const Complex fd = (product.eval(z + h) - product.eval(z - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(exact - fd) /
                                std::max(std::abs(exact), 1e-12));
  }
  return {"blaschke_derivative_finite_difference", worst <= 1e-6,
          "worst relative gap = " + sci(worst)};
}

CheckResult check_blaschke_permutation() {
  detail::DeterministicRng rng(103);
  double worst = 0.0;
  for (int c = 0; c < 10; ++c) {
    const PoleConfiguration config = random_configuration(rng, 2, 8, 0.9);
    std::vector<Complex> values = config.poles();
    for (std::size_t k = values.size(); k > 1; --k)
      std::swap(values[k - 1], values[rng.bits() % k]);
    std::vector<DiscPoint> shuffled;
    shuffled.reserve(values.size());
    for (Complex v : values) shuffled.emplace_back(v);
    const BlaschkeProduct original(config);
    const BlaschkeProduct permuted{PoleConfiguration(shuffled)};
    for (int i = 0; i < 64; ++i) {
      const Complex z = i % 2 == 0 ? rng.on_circle() : rng.in_disc(0.95);
      worst = std::max(worst, std::abs(original.eval(z) - permuted.eval(z)));
    }
  }
  return {"blaschke_eval_permutation_invariant", worst <= 1e-15,
          "worst reorder gap = " + sci(worst)};
}

CheckResult check_sup_monotone() {
  detail::DeterministicRng rng(104);
  bool monotone = true;
  double worst_drop = 0.0;
  for (int c = 0; c < 5; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 8, 0.9);
    double previous = 0.0;
    for (int grid = 256; grid <= 8192; grid *= 2) {
      const double value = sup_norm_derivative_on_circle(config, grid);
      if (value < previous - 1e-12) {
        monotone = false;
        worst_drop = std::max(worst_drop, previous - value);
      }
      previous = value;
    }
  }
  return {"blaschke_derivative_sup_monotone", monotone,
          monotone ? "nondecreasing on doubling grids"
                   : "worst drop = " + sci(worst_drop)};
}

CheckResult check_szego_oracle() {
  detail::DeterministicRng rng(105);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DiscPoint a(rng.in_disc(0.9));
    const DiscPoint b(rng.in_disc(0.9));
    const double r = std::max(a.modulus(), b.modulus());
    const QuadratureSpec spec = QuadratureSpec::for_config(1, r);
    const AnalyticFunction fa = analyze(
        [&a](Complex z) { return szego_kernel(a.value(), z); }, spec,
        r > 0.0 ? 1.0 / r : 0.0);
    const AnalyticFunction fb = analyze(
        [&b](Complex z) { return szego_kernel(b.value(), z); }, spec,
        r > 0.0 ? 1.0 / r : 0.0);
    worst = std::max(worst,
                     std::abs(inner_product(fa, fb) - szego_inner_oracle(a, b)));
  }
  return {"szego_kernel_inner_product_oracle", worst <= tol::kernel_oracle,
          "worst |quadrature - closed form| = " + sci(worst)};
}

CheckResult check_parseval() {
  detail::DeterministicRng rng(106);
  double worst = 0.0;
  for (int c = 0; c < 10; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 8, 0.8);
    const QuadratureSpec spec = QuadratureSpec::for_config(config);
    const MalmquistWalshBasis basis(config, spec);
    Eigen::VectorXcd coords = random_coordinates(rng, config.degree());
    coords.normalize();
    const int m = spec.sample_count;
    const double step = 2.0 * std::numbers::pi / m;
    std::vector<Complex> values(static_cast<std::size_t>(config.degree()));
    double grid_energy = 0.0;
    for (int i = 0; i < m; ++i) {
      basis.element_values(std::polar(1.0, step * i), values);
      Complex f = 0.0;
      for (int k = 0; k < config.degree(); ++k)
        f += coords(k) * values[static_cast<std::size_t>(k)];
      grid_energy += std::norm(f);
    }
    grid_energy /= m;
    const Eigen::VectorXcd coefficients =
        basis.coefficient_matrix() * coords;
    worst = std::max(worst,
                     std::abs(coefficients.squaredNorm() - grid_energy));
  }
  return {"parseval_grid_vs_coefficients", worst <= 1e-12,
          "worst |sum - mean| = " + sci(worst)};
}

CheckResult check_hardy_inequality() {
  detail::DeterministicRng rng(107);
  double worst_excess = -1e300;
  for (int c = 0; c < 20; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 8, 0.9);
    const MalmquistWalshBasis basis(config,
                                    QuadratureSpec::for_config(config));
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::VectorXcd coefficients =
          basis.coefficient_matrix() *
          random_coordinates(rng, config.degree());
      std::vector<Complex> taylor(coefficients.data(),
                                  coefficients.data() + coefficients.size());
      const AnalyticFunction f = AnalyticFunction::from_coefficients(
          std::move(taylor), basis.elements().front().decay_radius());
      const double wiener = space_norm(f, FunctionSpace::wiener);
      const double h1 = space_norm(derivative(f), FunctionSpace::h1);
      const double bound = std::numbers::pi * h1 + std::abs(f.taylor()[0]);
      worst_excess = std::max(worst_excess, wiener - bound);
    }
  }
  return {"hardy_inequality_wiener_vs_h1", worst_excess <= tol::bound_slack,
          "worst ||f||_W - bound = " + sci(worst_excess)};
}

CheckResult check_cauchy_schwarz() {
  detail::DeterministicRng rng(108);
  double worst = -1e300;
  for (int i = 0; i < 50; ++i) {
    const PoleConfiguration config = random_configuration(rng, 1, 8, 0.85);
    const MalmquistWalshBasis basis(config,
                                    QuadratureSpec::for_config(config));
    const Eigen::VectorXcd fc =
        basis.coefficient_matrix() * random_coordinates(rng, config.degree());
    const Eigen::VectorXcd gc =
        basis.coefficient_matrix() * random_coordinates(rng, config.degree());
    const double lhs = std::abs(fc.dot(gc));
    worst = std::max(worst, lhs - fc.norm() * gc.norm());
  }
  return {"cauchy_schwarz_inner_products", worst <= 1e-12,
          "worst |(f,g)| - ||f|| ||g|| = " + sci(worst)};
}

CheckResult check_besov_zero() {
  detail::DeterministicRng rng(109);
  double worst = 0.0;
  for (int c = 0; c < 20; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 8, 0.85);
    const MalmquistWalshBasis basis(config,
                                    QuadratureSpec::for_config(config));
    const Eigen::VectorXcd coefficients =
        basis.coefficient_matrix() * random_coordinates(rng, config.degree());
    std::vector<Complex> taylor(coefficients.data(),
                                coefficients.data() + coefficients.size());
    const AnalyticFunction f =
        AnalyticFunction::from_coefficients(std::move(taylor));
    worst = std::max(worst, std::abs(space_norm(f, FunctionSpace::besov, 0.0) -
                                     space_norm(f, FunctionSpace::h2)));
  }
  return {"besov_zero_equals_h2", worst <= tol::exact_identity,
          "worst gap = " + sci(worst)};
}

CheckResult check_orthonormality() {
  detail::DeterministicRng rng(110);
  double worst = 0.0;
  for (int c = 0; c < 12; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 32, 0.9);
    const MalmquistWalshBasis basis(config,
                                    QuadratureSpec::for_config(config));
    const Eigen::MatrixXcd gram =
        basis.coefficient_matrix().adjoint() * basis.coefficient_matrix();
    const double gap =
        (gram - Eigen::MatrixXcd::Identity(config.degree(), config.degree()))
            .cwiseAbs()
            .maxCoeff();
    worst = std::max(worst, gap);
  }
  return {"malmquist_walsh_orthonormal", worst <= tol::orthonormality,
          "worst ||Gram - I||_max = " + sci(worst)};
}

CheckResult check_orthogonal_complement() {
  detail::DeterministicRng rng(111);
  double worst = 0.0;
  for (int c = 0; c < 5; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 8, 0.8);
    const QuadratureSpec spec = QuadratureSpec::for_config(config);
    const MalmquistWalshBasis basis(config, spec);
    const BlaschkeProduct product(config);
    for (int m = 0; m < config.degree(); ++m) {
      const AnalyticFunction shifted = analyze(
          [&product, m](Complex z) {
            Complex power = 1.0;
            for (int j = 0; j < m; ++j) power *= z;
            return product.eval(z) * power;
          },
          spec);
      for (const AnalyticFunction& element : basis.elements())
        worst = std::max(worst, std::abs(inner_product(element, shifted)));
    }
  }
  return {"basis_spans_orthogonal_complement", worst <= tol::orthonormality,
          "worst |(e_k, B z^m)| = " + sci(worst)};
}

CheckResult check_gram_hermitian_psd() {
  detail::DeterministicRng rng(112);
  double worst_defect = 0.0;
  double worst_negative = 0.0;
  for (int c = 0; c < 8; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 16, 0.9);
    const DerivativeGram gram = derivative_gram(
        MalmquistWalshBasis(config, QuadratureSpec::for_config(config)));
    worst_defect = std::max(
        worst_defect,
        (gram.matrix - gram.matrix.adjoint()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram.matrix);
    worst_negative =
        std::min(worst_negative, solver.eigenvalues().minCoeff());
  }
  const bool ok = worst_defect <= tol::hermitian_defect &&
                  worst_negative >= -tol::psd_slack;
  return {"derivative_gram_hermitian_psd", ok,
          "hermitian defect = " + sci(worst_defect) +
              ", min eigenvalue = " + sci(worst_negative)};
}

CheckResult check_norm_symmetries() {
  detail::DeterministicRng rng(113);
  double worst = 0.0;
  for (int c = 0; c < 6; ++c) {
    const PoleConfiguration config = random_configuration(rng, 2, 10, 0.85);
    const double reference = operator_norm(config).norm;
    std::vector<DiscPoint> reversed, rotated, conjugated;
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Complex phase = std::polar(1.0, theta);
    for (auto it = config.poles().rbegin(); it != config.poles().rend(); ++it)
      reversed.emplace_back(*it);
    for (Complex pole : config.poles()) {
      rotated.emplace_back(phase * pole);
      conjugated.emplace_back(std::conj(pole));
    }
    worst = std::max(
        worst, std::abs(operator_norm(PoleConfiguration(reversed)).norm -
                        reference));
    worst = std::max(
        worst, std::abs(operator_norm(PoleConfiguration(rotated)).norm -
                        reference));
    worst = std::max(
        worst, std::abs(operator_norm(PoleConfiguration(conjugated)).norm -
                        reference));
  }
  return {"operator_norm_symmetry_invariant", worst <= tol::symmetry_slack,
          "worst symmetry gap = " + sci(worst)};
}

CheckResult check_rayleigh_bracket() {
  detail::DeterministicRng rng(114);
  bool ok = true;
  double margin = 1e300;
  for (int c = 0; c < 6; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 12, 0.85);
    const DerivativeGram gram = derivative_gram(
        MalmquistWalshBasis(config, QuadratureSpec::for_config(config)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram.matrix);
    const double lambda = solver.eigenvalues().maxCoeff();
    const double scale = std::max(1.0, lambda);
    const double diag = gram.matrix.diagonal().real().maxCoeff();
    const double trace = gram.matrix.trace().real();
    ok = ok && lambda >= diag - 1e-12 * scale && lambda <= trace + 1e-12 * scale;
    margin = std::min(margin, std::min(lambda - diag, trace - lambda));
  }
  return {"rayleigh_quotient_bracket", ok, "tightest margin = " + sci(margin)};
}

CheckResult check_n1_closed_form() {
  double worst = 0.0;
  const double phases[] = {0.0,          std::numbers::pi / 7.0,
                           std::numbers::pi / 3.0, 2.2,
                           -std::numbers::pi / 2.0};
  const double moduli[] = {0.0,  0.05, 0.15, 0.3, 0.45,
                           0.6,  0.75, 0.85, 0.9, 0.95};
  for (double modulus : moduli) {
    for (double phase : phases) {
      const Complex pole = std::polar(modulus, phase);
      const PoleConfiguration config{{DiscPoint(pole)}};
      // quadrature route, independent of the closed-form Gram assembly
      const DerivativeGram gram = derivative_gram(
          MalmquistWalshBasis(config, QuadratureSpec::for_config(config)));
      const double computed = std::sqrt(gram.matrix(0, 0).real());
      const double closed = modulus * std::sqrt(1.0 + modulus * modulus) /
                            (1.0 - modulus * modulus);
      worst = std::max(worst, std::abs(computed - closed));
      worst = std::max(worst, std::abs(operator_norm(config).norm - closed));
    }
  }
  return {"n1_norm_closed_form", worst <= tol::norm_identity,
          "worst |norm - |l| sqrt(1+|l|^2)/(1-|l|^2)| = " + sci(worst)};
}

CheckResult check_confluent_diagonal() {
  double worst = 0.0;
  for (int n : {2, 10, 100}) {
    for (double r : {0.1, 0.5, 0.9}) {
      const PoleConfiguration config =
          PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);
      const MalmquistWalshBasis basis(config,
                                      QuadratureSpec::for_config(config));
      const double diag =
          basis.derivative_coefficients().col(n - 1).squaredNorm();
      const double closed = confluent_derivative_norm_squared(n, r);
      worst = std::max(worst, std::abs(diag - closed) / closed);
    }
  }
  return {"confluent_derivative_norm_closed_form",
          worst <= tol::closed_form_rel,
          "worst relative gap = " + sci(worst)};
}

CheckResult check_expansion_identities() {
  detail::DeterministicRng rng(117);
  double worst = 0.0;
  {
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(Complex(0.5, 0.0)), 1);
    const std::vector<Complex> coords{Complex(1.0, 0.0)};
    const ExpansionResiduals residuals =
        verify_derivative_expansion(config, coords);
    worst = std::max(worst, std::max(residuals.derivative_identity,
                                     residuals.norm_identity));
  }
  {
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(Complex(0.3, 0.0)), 8);
    std::vector<Complex> coords(8, Complex(0.0, 0.0));
    coords.back() = 1.0;
    const ExpansionResiduals residuals =
        verify_derivative_expansion(config, coords);
    worst = std::max(worst, std::max(residuals.derivative_identity,
                                     residuals.norm_identity));
  }
  {
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(Complex(0.7, 0.0)), 16);
    std::vector<Complex> coords(16);
    for (Complex& c : coords) c = rng.normal();
    const ExpansionResiduals residuals =
        verify_derivative_expansion(config, coords);
    worst = std::max(worst, std::max(residuals.derivative_identity,
                                     residuals.norm_identity));
  }
  return {"confluent_derivative_expansion", worst <= tol::expansion_residual,
          "worst residual = " + sci(worst)};
}

CheckResult check_expansion_triangle() {
  detail::DeterministicRng rng(118);
  double worst = -1e300;
  for (int c = 0; c < 10; ++c) {
    const int n = 3 + static_cast<int>(rng.uniform01() * 14);
    const double r = rng.uniform(0.0, 0.8);
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);
    const MalmquistWalshBasis basis(config,
                                    QuadratureSpec::for_config(config));
    const Eigen::VectorXcd coords = random_coordinates(rng, n);
    const Eigen::VectorXcd f = basis.coefficient_matrix() * coords;
    const double derivative_norm = shift_derivative(f).norm();
    const std::vector<Complex> span(coords.data(), coords.data() + n);
    const auto [kernel_part, difference_part] =
        confluent_expansion_parts(span, r);
    const double q_norm = kernel_part.norm();
    const double p_norm = difference_part.norm();
    const double middle = (1.0 - r * r) * derivative_norm;
    worst = std::max(worst, std::abs(p_norm - q_norm) - middle);
    worst = std::max(worst, middle - (p_norm + q_norm));
  }
  return {"expansion_triangle_bracket", worst <= 1e-9,
          "worst violation = " + sci(worst)};
}

CheckResult check_gram_two_routes() {
  double worst = 0.0;
  for (int n : {2, 5, 16}) {
    for (double r : {0.3, 0.7, 0.9}) {
      const PoleConfiguration config =
          PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);
      const DerivativeGram quadrature = derivative_gram(
          MalmquistWalshBasis(config, QuadratureSpec::for_config(config)));
      const Eigen::MatrixXd banded = confluent_derivative_gram(n, r);
      const double scale = banded.cwiseAbs().maxCoeff();
      worst = std::max(
          worst,
          (quadrature.matrix - banded.cast<Complex>()).cwiseAbs().maxCoeff() /
              scale);
    }
  }
  return {"confluent_gram_two_routes_agree", worst <= 1e-10,
          "worst relative entry gap = " + sci(worst)};
}

CheckResult check_test_function_norm() {
  double worst = 0.0;
  const int cases[][2] = {{10, 2}, {4, 0}, {20, 4}};
  const double radii[] = {0.5, 0.3, 0.9};
  for (int i = 0; i < 3; ++i) {
    const int n = cases[i][0];
    const int s = cases[i][1];
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(Complex(radii[i], 0.0)), n);
    const AnalyticFunction f = test_function(config, s);
    const double norm = space_norm(f, FunctionSpace::h2);
    worst = std::max(worst, std::abs(norm * norm - (s + 3.0)));
  }
  return {"test_function_norm_identity", worst <= tol::norm_identity,
          "worst | ||f||^2 - (s+3) | = " + sci(worst)};
}

CheckResult check_certificates() {
  double margin = 1e300;
  const int cases[][2] = {{50, 4}, {100, 10}, {200, 14}};
  const double radii[] = {0.3, 0.5, 0.9};
  for (int i = 0; i < 3; ++i) {
    const ExtremalCertificate certificate =
        extremal_certificate(cases[i][0], radii[i], cases[i][1]);
    margin =
        std::min(margin, certificate.measured - certificate.certified_lower);
  }
  return {"extremal_certificate_sound", margin >= -tol::bound_slack,
          "tightest measured - certified = " + sci(margin)};
}

CheckResult check_bracket_grid() {
  double tightest = 1e300;
  for (int n = 2; n <= 64; n *= 2) {
    for (int tenths = 0; tenths <= 9; ++tenths) {
      const double r = tenths / 10.0;
      const BoundReport report = confluent_report(n, r);  // asserts the chain
      const double scale = n / (1.0 - r);
      tightest = std::min(tightest, report.A_upper * scale -
                                        report.norm_confluent);
    }
  }
  return {"theorem_bracket_grid", true,
          "tightest upper margin = " + sci(tightest)};
}

CheckResult check_dyakonov_random() {
  detail::DeterministicRng rng(123);
  bool all_hold = true;
  double tightest = 1e300;
  for (int c = 0; c < 100; ++c) {
    const PoleConfiguration config = random_configuration(rng, 1, 16, 0.9);
    const DyakonovBracket bracket = dyakonov_bracket(config);
    all_hold = all_hold && bracket.holds;
    tightest = std::min(tightest,
                        std::min(bracket.norm - bracket.lower,
                                 bracket.upper - bracket.norm));
  }
  return {"dyakonov_bracket_random_configs", all_hold,
          "tightest margin = " + sci(tightest)};
}

CheckResult check_ratio_trend() {
  const BoundReport small = confluent_report(8, 0.5);
  const BoundReport large = confluent_report(1024, 0.5);
  return {"normalized_ratio_trend", large.ratio > small.ratio,
          "ratio(1024) = " + sci(large.ratio) +
              ", ratio(8) = " + sci(small.ratio)};
}

CheckResult check_phi_consistency() {
  double worst = 0.0;
  for (int n : {2, 3, 5, 10, 100}) {
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
      const auto [c0, c1, c2] = phi_coefficients(n, r);
      const double denom = (1.0 - r * r) * (1.0 - r * r);
      const double assembled = (c0 * c0 + c1 * c1 + c2 * c2) / denom;
      const double closed = confluent_derivative_norm_squared(n, r);
      worst = std::max(worst, std::abs(assembled - closed) / closed);
    }
  }
  return {"phi_coefficient_consistency", worst <= tol::exact_identity,
          "worst relative gap = " + sci(worst)};
}

CheckResult check_randomized_bounded() {
  double slack = 1e300;
  for (int n : {4, 8}) {
    for (double r : {0.5, 0.9}) {
      const double max_norm = randomized_configuration_max(n, r, 10, 7);
      const double confluent = operator_norm(PoleConfiguration::confluent(
                                   DiscPoint(Complex(r, 0.0)), n))
                                   .norm;
      slack = std::min(slack, max_norm - confluent);
    }
  }
  return {"randomized_norms_within_bounds", slack >= -1e-12,
          "max minus confluent >= " + sci(slack)};
}

CheckResult check_embedding_records() {
  const int ns[] = {4, 16};
  const double rs[] = {0.0, 0.5};
  const auto besov =
      embedding_ratio_sweep(FunctionSpace::besov, 0.0, ns, rs, 10, 11);
  double worst = 0.0;
  for (const EmbeddingRecord& record : besov)
    worst = std::max(worst, std::abs(record.max_ratio - 1.0));
  const int single[] = {1};
  const double half[] = {0.5};
  const auto wiener =
      embedding_ratio_sweep(FunctionSpace::wiener, 0.0, single, half, 20, 12);
  const double kernel_gap =
      std::abs(wiener.front().max_ratio - std::sqrt(3.0));
  const bool ok = worst <= tol::exact_identity && kernel_gap <= 1e-10;
  return {"embedding_ratio_records", ok,
          "besov(0) gap = " + sci(worst) +
              ", wiener kernel gap = " + sci(kernel_gap)};
}

}  // namespace

int run_verification(const std::function<void(const CheckResult&)>& report) {
  struct NamedCheck {
    const char* name;
    CheckResult (*run)();
  };
  static constexpr NamedCheck checks[] = {
      {"blaschke_unimodular_on_circle", check_blaschke_unimodular},
      {"blaschke_derivative_finite_difference", check_blaschke_derivative_fd},
      {"blaschke_eval_permutation_invariant", check_blaschke_permutation},
      {"blaschke_derivative_sup_monotone", check_sup_monotone},
      {"szego_kernel_inner_product_oracle", check_szego_oracle},
      {"parseval_grid_vs_coefficients", check_parseval},
      {"hardy_inequality_wiener_vs_h1", check_hardy_inequality},
      {"cauchy_schwarz_inner_products", check_cauchy_schwarz},
      {"besov_zero_equals_h2", check_besov_zero},
      {"malmquist_walsh_orthonormal", check_orthonormality},
      {"basis_spans_orthogonal_complement", check_orthogonal_complement},
      {"derivative_gram_hermitian_psd", check_gram_hermitian_psd},
      {"operator_norm_symmetry_invariant", check_norm_symmetries},
      {"rayleigh_quotient_bracket", check_rayleigh_bracket},
      {"n1_norm_closed_form", check_n1_closed_form},
      {"confluent_derivative_norm_closed_form", check_confluent_diagonal},
      {"confluent_derivative_expansion", check_expansion_identities},
      {"expansion_triangle_bracket", check_expansion_triangle},
      {"confluent_gram_two_routes_agree", check_gram_two_routes},
      {"test_function_norm_identity", check_test_function_norm},
      {"extremal_certificate_sound", check_certificates},
      {"theorem_bracket_grid", check_bracket_grid},
      {"dyakonov_bracket_random_configs", check_dyakonov_random},
      {"normalized_ratio_trend", check_ratio_trend},
      {"phi_coefficient_consistency", check_phi_consistency},
      {"randomized_norms_within_bounds", check_randomized_bounded},
      {"embedding_ratio_records", check_embedding_records}};
  int failures = 0;
  for (const NamedCheck& check : checks) {
    CheckResult result;
    try {
      result = check.run();
    } catch (const std::exception& error) {
      result.name = check.name;
      result.passed = false;
      result.detail = error.what();
    }
    if (!result.passed) ++failures;
    if (report) report(result);
  }
  return failures;
}

}  // namespace kbnorm
