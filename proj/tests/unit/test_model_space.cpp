// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "detail/rng.hpp"
#include "doctest.h"
#include "kbnorm/errors.hpp"
#include "kbnorm/model_space.hpp"

using namespace kbnorm;

namespace {

PoleConfiguration random_configuration(detail::DeterministicRng& rng,
                                       int max_degree, double max_modulus) {
  const int n = 1 + static_cast<int>(rng.uniform01() * max_degree);
  std::vector<DiscPoint> poles;
  for (int k = 0; k < n; ++k) poles.emplace_back(rng.in_disc(max_modulus));
  return PoleConfiguration(poles);
}

MalmquistWalshBasis make_basis(const PoleConfiguration& config) {
  return MalmquistWalshBasis(config, QuadratureSpec::for_config(config));
}

}  // namespace

TEST_CASE("monomial configuration gives the monomial basis") {
  const PoleConfiguration zeros =
      PoleConfiguration::confluent(DiscPoint(0.0), 3);
  const MalmquistWalshBasis basis = make_basis(zeros);
  // e_k = +- z^{k-1}; compare moduli, the sign of b_0 = -z is not pinned
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 8; ++j) {
      const double expected = j == k ? 1.0 : 0.0;
      CHECK(std::abs(basis.coefficient_matrix()(j, k)) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("kernel element for a single pole") {
  const PoleConfiguration half{{DiscPoint(0.5)}};
  const MalmquistWalshBasis basis = make_basis(half);
  const double scale = std::sqrt(0.75);
  double expected = scale;
  for (int k = 0; k < 30; ++k) {
    CHECK(std::abs(basis.coefficient_matrix()(k, 0) - expected) <= 1e-12);
    expected *= 0.5;
  }
  CHECK(space_norm(basis.elements()[0], FunctionSpace::h2) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("double pole element stays orthonormal") {
  const PoleConfiguration config =
      PoleConfiguration::confluent(DiscPoint(0.5), 2);
  const MalmquistWalshBasis basis = make_basis(config);
  CHECK(space_norm(basis.elements()[1], FunctionSpace::h2) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(inner_product(basis.elements()[0], basis.elements()[1])) <=
        1e-10);
}

TEST_CASE("orthonormality for random configurations") {
  detail::DeterministicRng rng(31);
  double worst = 0.0;
  for (int c = 0; c < 10; ++c) {
    const PoleConfiguration config = random_configuration(rng, 32, 0.9);
    const MalmquistWalshBasis basis = make_basis(config);
    const Eigen::MatrixXcd gram =
        basis.coefficient_matrix().adjoint() * basis.coefficient_matrix();
    worst = std::max(worst, (gram - Eigen::MatrixXcd::Identity(
                                        config.degree(), config.degree()))
                                .cwiseAbs()
                                .maxCoeff());
  }
  CHECK(worst <= tol::orthonormality);
}

TEST_CASE("elements span the orthogonal complement of B H^2") {
  const PoleConfiguration config{
      {DiscPoint(Complex(0.3, 0.0)), DiscPoint(Complex(-0.2, 0.4))}};
  const QuadratureSpec spec = QuadratureSpec::for_config(config);
  const MalmquistWalshBasis basis(config, spec);
  const BlaschkeProduct product(config);
  double worst = 0.0;
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
  CHECK(worst <= tol::orthonormality);
}

TEST_CASE("element derivative agrees with finite differences") {
  detail::DeterministicRng rng(32);
  const PoleConfiguration config{
      {DiscPoint(Complex(0.4, 0.1)), DiscPoint(Complex(-0.3, 0.2)),
       DiscPoint(Complex(0.0, -0.5))}};
  const MalmquistWalshBasis basis = make_basis(config);
  const double h = 1e-6;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 10; ++i) {
      const Complex z = rng.in_disc(0.8);
      const Complex fd = (basis.element_value(k, z + h) -
                          basis.element_value(k, z - h)) /
                         (2.0 * h);
      CHECK(std::abs(basis.element_derivative(k, z) - fd) <=
            1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("element derivative is finite at zeros of leading factors") {
  const PoleConfiguration config =
      PoleConfiguration::confluent(DiscPoint(0.5), 2);
  const MalmquistWalshBasis basis = make_basis(config);
  // e_2 has the factor b_{1/2}, which vanishes at z = 1/2
  const Complex value = basis.element_derivative(1, Complex(0.5, 0.0));
  CHECK(std::isfinite(value.real()));
  const double h = 1e-6;
  const Complex fd = (basis.element_value(1, Complex(0.5 + h, 0.0)) -
                      basis.element_value(1, Complex(0.5 - h, 0.0))) /
                     (2.0 * h);
  CHECK(std::abs(value - fd) <= 1e-7 * std::max(1.0, std::abs(fd)));
}

TEST_CASE("derivative gram closed forms") {
  const DerivativeGram single =
      derivative_gram(make_basis(PoleConfiguration{{DiscPoint(0.5)}}));
  // (e_1', e_1') = r^2 (1 + r^2)/(1 - r^2)^2 = 5/9 at r = 1/2
  CHECK(single.matrix(0, 0).real() ==
        doctest::Approx(5.0 / 9.0).epsilon(1e-10));

  const DerivativeGram monomials = derivative_gram(
      make_basis(PoleConfiguration::confluent(DiscPoint(0.0), 2)));
  CHECK(std::abs(monomials.matrix(0, 0)) <= 1e-12);
  CHECK(monomials.matrix(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(monomials.matrix(0, 1)) <= 1e-12);

  const DerivativeGram twice = derivative_gram(
      make_basis(PoleConfiguration::confluent(DiscPoint(0.5), 2)));
  // ((n-1)^2 + (2n-1)^2 r^2 + n^2 r^4)/(1-r^2)^2 = 3.5/0.5625 at n=2, r=1/2
  CHECK(twice.matrix(1, 1).real() ==
        doctest::Approx(3.5 / 0.5625).epsilon(1e-10));
  CHECK((twice.matrix - twice.matrix.adjoint()).cwiseAbs().maxCoeff() <=
        tol::hermitian_defect);
}

TEST_CASE("confluent coefficient map entries") {
  const Eigen::MatrixXd map = confluent_derivative_map(2, 0.5);
  REQUIRE(map.rows() == 3);
  REQUIRE(map.cols() == 2);
  CHECK(map(0, 0) == doctest::Approx(0.5));
  CHECK(map(0, 1) == doctest::Approx(-1.0));
  CHECK(map(1, 0) == doctest::Approx(-0.25));
  CHECK(map(1, 1) == doctest::Approx(1.5));
  CHECK(map(2, 0) == doctest::Approx(0.0));
  CHECK(map(2, 1) == doctest::Approx(-0.5));

  // the map applied to coordinates equals the two expansion parts combined
  detail::DeterministicRng rng(33);
  std::vector<Complex> coords(6);
  for (Complex& c : coords) c = rng.normal();
  const Eigen::MatrixXd big = confluent_derivative_map(6, 0.37);
  const auto [first, second] = confluent_expansion_parts(coords, 0.37);
  const Eigen::VectorXcd direct =
      big * Eigen::Map<const Eigen::VectorXcd>(coords.data(), 6);
  CHECK((direct - (first - second)).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("banded and quadrature gram agree") {
  double worst = 0.0;
  for (int n : {2, 5, 16}) {
    for (double r : {0.3, 0.7, 0.9}) {
      const PoleConfiguration config =
          PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);
      const DerivativeGram quadrature = derivative_gram(make_basis(config));
      const Eigen::MatrixXd banded = confluent_derivative_gram(n, r);
      worst = std::max(worst, (quadrature.matrix - banded.cast<Complex>())
                                      .cwiseAbs()
                                      .maxCoeff() /
                                  banded.cwiseAbs().maxCoeff());
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("operator norm of monomial spaces") {
  for (int n : {2, 4, 8, 16}) {
    const OperatorNormResult result =
        operator_norm(PoleConfiguration::confluent(DiscPoint(0.0), n));
    CHECK(std::abs(result.norm - (n - 1.0)) <= 1e-9);
    CHECK(result.residual <= tol::eigen_residual);
    CHECK(result.dimension == n);
  }
}

TEST_CASE("operator norm for a single pole") {
  const OperatorNormResult result =
      operator_norm(PoleConfiguration{{DiscPoint(0.5)}});
  // |l| sqrt(1 + |l|^2)/(1 - |l|^2) = sqrt(5)/3
  CHECK(std::abs(result.norm - std::sqrt(5.0) / 3.0) <= 1e-10);
}

TEST_CASE("single-pole norm closed form across the disc") {
  const double moduli[] = {0.0, 0.2, 0.5, 0.8, 0.95};
  const double phases[] = {0.0, 1.0, -2.1};
  for (double modulus : moduli) {
    for (double phase : phases) {
      const PoleConfiguration config{
          {DiscPoint(std::polar(modulus, phase))}};
      const double closed = modulus * std::sqrt(1.0 + modulus * modulus) /
                            (1.0 - modulus * modulus);
      // banded route
      CHECK(std::abs(operator_norm(config).norm - closed) <= 1e-10);
      // quadrature route
      const DerivativeGram gram = derivative_gram(make_basis(config));
      CHECK(std::abs(std::sqrt(gram.matrix(0, 0).real()) - closed) <= 1e-10);
    }
  }
}

TEST_CASE("double pole norm against the explicit 2x2 eigenvalue formula") {
  const PoleConfiguration config =
      PoleConfiguration::confluent(DiscPoint(0.5), 2);
  const DerivativeGram gram = derivative_gram(make_basis(config));
  const double a = gram.matrix(0, 0).real();
  const double d = gram.matrix(1, 1).real();
  const double b = std::abs(gram.matrix(0, 1));
  const double lambda =
      0.5 * (a + d + std::sqrt((a - d) * (a - d) + 4.0 * b * b));
  CHECK(operator_norm(config).norm ==
        doctest::Approx(std::sqrt(lambda)).epsilon(1e-10));
}

TEST_CASE("operator norm symmetry invariance") {
  detail::DeterministicRng rng(34);
  for (int c = 0; c < 4; ++c) {
    std::vector<DiscPoint> poles;
    const int n = 2 + static_cast<int>(rng.uniform01() * 6);
    for (int k = 0; k < n; ++k) poles.emplace_back(rng.in_disc(0.85));
    const PoleConfiguration config(poles);
    const double reference = operator_norm(config).norm;

    std::vector<DiscPoint> reversed(poles.rbegin(), poles.rend());
    CHECK(std::abs(operator_norm(PoleConfiguration(reversed)).norm -
                   reference) <= tol::symmetry_slack);

    const Complex phase = std::polar(1.0, 1.234);
    std::vector<DiscPoint> rotated, conjugated;
    for (const DiscPoint& p : poles) {
      rotated.emplace_back(phase * p.value());
      conjugated.emplace_back(std::conj(p.value()));
    }
    CHECK(std::abs(operator_norm(PoleConfiguration(rotated)).norm -
                   reference) <= tol::symmetry_slack);
    CHECK(std::abs(operator_norm(PoleConfiguration(conjugated)).norm -
                   reference) <= tol::symmetry_slack);
  }
}

TEST_CASE("largest eigenvalue sits between max diagonal and trace") {
  detail::DeterministicRng rng(35);
  for (int c = 0; c < 5; ++c) {
    const PoleConfiguration config = random_configuration(rng, 12, 0.85);
    const DerivativeGram gram = derivative_gram(make_basis(config));
    const double lambda = operator_norm(config, QuadratureSpec::for_config(
                                                    config))
                              .lambda_max;
    const double scale = std::max(1.0, lambda);
    CHECK(lambda >= gram.matrix.diagonal().real().maxCoeff() - 1e-9 * scale);
    CHECK(lambda <= gram.matrix.trace().real() + 1e-9 * scale);
  }
}

TEST_CASE("last diagonal entry matches the closed form") {
  double worst = 0.0;
  for (int n : {2, 10}) {
    for (double r : {0.1, 0.5, 0.9}) {
      const PoleConfiguration config =
          PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);
      const MalmquistWalshBasis basis = make_basis(config);
      const double diagonal =
          basis.derivative_coefficients().col(n - 1).squaredNorm();
      const double nm1 = n - 1.0;
      const double closed =
          (nm1 * nm1 + (2.0 * n - 1.0) * (2.0 * n - 1.0) * r * r +
           static_cast<double>(n) * n * r * r * r * r) /
          ((1.0 - r * r) * (1.0 - r * r));
      worst = std::max(worst, std::abs(diagonal - closed) / closed);
    }
  }
  CHECK(worst <= tol::closed_form_rel);
}

TEST_CASE("test function norms and validation") {
  const PoleConfiguration ten =
      PoleConfiguration::confluent(DiscPoint(0.5), 10);
  const AnalyticFunction f = test_function(ten, 2);
  const double norm = space_norm(f, FunctionSpace::h2);
  CHECK(std::abs(norm * norm - 5.0) <= tol::norm_identity);

  const PoleConfiguration four =
      PoleConfiguration::confluent(DiscPoint(Complex(0.3, 0.0)), 4);
  const AnalyticFunction g = test_function(four, 0);
  const double g_norm = space_norm(g, FunctionSpace::h2);
  CHECK(std::abs(g_norm * g_norm - 3.0) <= tol::norm_identity);

  CHECK_THROWS_AS(test_function(ten, 3), std::invalid_argument);   // odd
  CHECK_THROWS_AS(test_function(four, 2), std::invalid_argument);  // n < s+3
  const PoleConfiguration mixed{{DiscPoint(0.1), DiscPoint(0.2)}};
  CHECK_THROWS_AS(test_function(mixed, 0), std::invalid_argument);
  const PoleConfiguration rotated =
      PoleConfiguration::confluent(DiscPoint(Complex(0.0, 0.5)), 4);
  CHECK_THROWS_AS(test_function(rotated, 0), std::invalid_argument);
}

TEST_CASE("derivative expansion identities") {
  {
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(0.5), 1);
    const std::vector<Complex> coords{Complex(1.0, 0.0)};
    const ExpansionResiduals residuals =
        verify_derivative_expansion(config, coords);
    CHECK(residuals.derivative_identity <= 1e-10);
    CHECK(residuals.norm_identity <= 1e-10);
  }
  {
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(Complex(0.3, 0.0)), 8);
    std::vector<Complex> coords(8, Complex(0.0, 0.0));
    coords.back() = 1.0;
    const ExpansionResiduals residuals =
        verify_derivative_expansion(config, coords);
    CHECK(residuals.derivative_identity <= 1e-9);
    CHECK(residuals.norm_identity <= 1e-9);
  }
  {
    detail::DeterministicRng rng(36);
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(Complex(0.7, 0.0)), 16);
    std::vector<Complex> coords(16);
    for (Complex& c : coords) c = rng.normal();
    const ExpansionResiduals residuals =
        verify_derivative_expansion(config, coords);
    CHECK(residuals.derivative_identity <= tol::expansion_residual);
    CHECK(residuals.norm_identity <= tol::expansion_residual);
  }
}

TEST_CASE("triangle bracket around the expansion parts") {
  detail::DeterministicRng rng(37);
  for (int c = 0; c < 6; ++c) {
    const int n = 3 + static_cast<int>(rng.uniform01() * 10);
    const double r = rng.uniform(0.0, 0.8);
    const PoleConfiguration config =
        PoleConfiguration::confluent(DiscPoint(Complex(r, 0.0)), n);
    const MalmquistWalshBasis basis = make_basis(config);
    Eigen::VectorXcd coords(n);
    for (int k = 0; k < n; ++k) coords(k) = rng.normal();
    const Eigen::VectorXcd f = basis.coefficient_matrix() * coords;
    Eigen::VectorXcd shifted = Eigen::VectorXcd::Zero(f.size());
    for (Eigen::Index k = 0; k + 1 < f.size(); ++k)
      shifted(k) = static_cast<double>(k + 1) * f(k + 1);
    const double middle = (1.0 - r * r) * shifted.norm();
    const std::vector<Complex> span(coords.data(), coords.data() + n);
    const auto [kernel_part, difference_part] =
        confluent_expansion_parts(span, r);
    CHECK(std::abs(difference_part.norm() - kernel_part.norm()) <=
          middle + 1e-9);
    CHECK(middle <= difference_part.norm() + kernel_part.norm() + 1e-9);
  }
}
