// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "detail/rng.hpp"
#include "doctest.h"
#include "kbnorm/errors.hpp"
#include "kbnorm/hardy.hpp"
#include "kbnorm/model_space.hpp"

using namespace kbnorm;

namespace {

AnalyticFunction analyze_kernel(Complex pole, int samples = 0) {
  const double r = std::abs(pole);
  QuadratureSpec spec = QuadratureSpec::for_config(1, r);
  if (samples > 0) spec.sample_count = samples;
  return analyze([pole](Complex z) { return szego_kernel(pole, z); }, spec,
                 r > 0.0 ? 1.0 / r : 0.0);
}

}  // namespace

TEST_CASE("quadrature policy sizes") {
  CHECK(QuadratureSpec::for_config(1, 0.5).sample_count == 4096);
  CHECK(QuadratureSpec::for_config(1024, 0.5).sample_count == 131072);
  CHECK(QuadratureSpec::for_config(100, 0.9).sample_count == 65536);
  QuadratureSpec bad;
  bad.sample_count = 100;  // not a power of two
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.sample_count = 32;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("taylor extraction of the szego kernel") {
  QuadratureSpec spec;
  spec.sample_count = 256;
  const AnalyticFunction f =
      analyze([](Complex z) { return szego_kernel(0.5, z); }, spec, 2.0);
  double worst = 0.0;
  double expected = 1.0;
  for (int k = 0; k < 40; ++k) {
    worst = std::max(worst,
                     std::abs(f.taylor()[static_cast<std::size_t>(k)] -
                              Complex(expected, 0.0)));
    expected *= 0.5;
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("taylor extraction of monomials and constants") {
  QuadratureSpec spec;
  spec.sample_count = 64;
  const AnalyticFunction one = analyze([](Complex) { return Complex(1.0); },
                                       spec);
  CHECK(std::abs(one.taylor()[0] - Complex(1.0)) <= 1e-14);
  for (int k = 1; k < 64; ++k)
    CHECK(std::abs(one.taylor()[static_cast<std::size_t>(k)]) <= 1e-14);

  const AnalyticFunction cubed =
      analyze([](Complex z) { return z * z * z; }, spec);
  CHECK(std::abs(cubed.taylor()[3] - Complex(1.0)) <= 1e-14);
  CHECK(std::abs(cubed.taylor()[2]) <= 1e-14);
}

TEST_CASE("non-analytic samples are rejected") {
  QuadratureSpec spec;
  spec.sample_count = 64;
  CHECK_THROWS_AS(analyze([](Complex z) { return std::conj(z); }, spec),
                  AnalyticityError);
  CHECK_THROWS_AS(analyze([](Complex z) { return 1.0 / z; }, spec),
                  AnalyticityError);
}

TEST_CASE("recorded aliasing bound dominates the aliasing error") {
  // Loose tolerance admits a slowly decaying kernel on a small grid, where
  // aliasing is large enough to sit above double rounding.
  QuadratureSpec spec;
  spec.sample_count = 64;
  spec.tolerance = 1e-3;
  const double a = 0.72;
  const AnalyticFunction f =
      analyze([a](Complex z) { return szego_kernel(a, z); }, spec, 1.0 / a);
  REQUIRE(f.aliasing_bound().has_value());
  const double bound = *f.aliasing_bound();
  const double error_at_zero = std::abs(f.taylor()[0] - Complex(1.0));
  CHECK(error_at_zero > 1e-11);  // aliasing is really there
  CHECK(error_at_zero <= bound);
}

TEST_CASE("inner products against the szego oracle") {
  const AnalyticFunction k_half = analyze_kernel(0.5);
  CHECK(std::abs(inner_product(k_half, k_half) - Complex(4.0 / 3.0)) <=
        1e-12);

  const AnalyticFunction k_zero = analyze_kernel(0.0);
  const AnalyticFunction k_b = analyze_kernel(Complex(0.3, 0.4));
  CHECK(std::abs(inner_product(k_zero, k_b) - Complex(1.0)) <= 1e-12);

  const AnalyticFunction k_minus = analyze_kernel(-0.5);
  CHECK(std::abs(inner_product(k_half, k_minus) - Complex(0.8)) <= 1e-12);

  CHECK(szego_inner_oracle(DiscPoint(0.5), DiscPoint(0.5)) ==
        Complex(4.0 / 3.0));
  CHECK(szego_inner_oracle(DiscPoint(0.0), DiscPoint(Complex(0.2, 0.6))) ==
        Complex(1.0));
  CHECK(szego_inner_oracle(DiscPoint(0.5), DiscPoint(-0.5)).real() ==
        doctest::Approx(0.8));
}

TEST_CASE("monomials are orthogonal") {
  QuadratureSpec spec;
  spec.sample_count = 64;
  const AnalyticFunction z = analyze([](Complex w) { return w; }, spec);
  const AnalyticFunction one =
      analyze([](Complex) { return Complex(1.0); }, spec);
  CHECK(std::abs(inner_product(z, one)) <= 1e-14);
}

TEST_CASE("inner product is conjugate linear in the second slot") {
  const AnalyticFunction f = analyze_kernel(Complex(0.4, 0.2));
  const AnalyticFunction g = analyze_kernel(Complex(-0.3, 0.5));
  const Complex forward = inner_product(f, g);
  const Complex backward = inner_product(g, f);
  CHECK(std::abs(forward - std::conj(backward)) <= 1e-13);
}

TEST_CASE("mixed sample counts are resampled") {
  const AnalyticFunction coarse = analyze_kernel(0.5, 256);
  const AnalyticFunction fine = analyze_kernel(Complex(0.0, 0.6), 4096);
  const Complex value = inner_product(coarse, fine);
  const Complex oracle =
      szego_inner_oracle(DiscPoint(0.5), DiscPoint(Complex(0.0, 0.6)));
  CHECK(std::abs(value - oracle) <= 1e-12);
}

TEST_CASE("inner product oracle over random pairs") {
  detail::DeterministicRng rng(21);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DiscPoint a(rng.in_disc(0.9));
    const DiscPoint b(rng.in_disc(0.9));
    const int samples =
        QuadratureSpec::for_config(1, std::max(a.modulus(), b.modulus()))
            .sample_count;
    const AnalyticFunction fa = analyze_kernel(a.value(), samples);
    const AnalyticFunction fb = analyze_kernel(b.value(), samples);
    worst = std::max(worst,
                     std::abs(inner_product(fa, fb) - szego_inner_oracle(a, b)));
  }
  CHECK(worst <= tol::kernel_oracle);
}

TEST_CASE("space norms") {
  const AnalyticFunction k_half = analyze_kernel(0.5);
  CHECK(space_norm(k_half, FunctionSpace::h2) ==
        doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
  CHECK(space_norm(k_half, FunctionSpace::wiener) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(space_norm(k_half, FunctionSpace::besov, 0.0) ==
        doctest::Approx(space_norm(k_half, FunctionSpace::h2))
            .epsilon(1e-14));

  QuadratureSpec spec;
  spec.sample_count = 64;
  const AnalyticFunction one =
      analyze([](Complex) { return Complex(1.0); }, spec);
  CHECK(space_norm(one, FunctionSpace::h1) == doctest::Approx(1.0));
  const AnalyticFunction cubed =
      analyze([](Complex z) { return z * z * z; }, spec);
  CHECK(space_norm(cubed, FunctionSpace::h1) == doctest::Approx(1.0));
}

TEST_CASE("parseval on the grid") {
  const AnalyticFunction f = analyze_kernel(Complex(0.3, -0.6));
  const std::vector<Complex> samples = f.circle_samples();
  double energy = 0.0;
  for (const Complex& v : samples) energy += std::norm(v);
  energy /= static_cast<double>(samples.size());
  const double h2 = space_norm(f, FunctionSpace::h2);
  CHECK(std::abs(h2 * h2 - energy) <= 1e-12);
}

TEST_CASE("derivative by coefficient shift") {
  QuadratureSpec spec;
  spec.sample_count = 64;
  const AnalyticFunction cubed =
      analyze([](Complex z) { return z * z * z; }, spec);
  const AnalyticFunction d = derivative(cubed);
  CHECK(std::abs(d.taylor()[2] - Complex(3.0)) <= 1e-13);
  CHECK(std::abs(d.taylor()[3]) <= 1e-13);

  const AnalyticFunction one =
      analyze([](Complex) { return Complex(1.0); }, spec);
  CHECK(space_norm(derivative(one), FunctionSpace::h2) <= 1e-13);

  // || d/dz k_{1/2} ||^2 = sum k^2 (1/4)^k = 20/27
  const AnalyticFunction k_half = analyze_kernel(0.5);
  const double value = space_norm(derivative(k_half), FunctionSpace::h2);
  double series = 0.0;
  for (int k = 1; k < 120; ++k)
    series += static_cast<double>(k) * k * std::pow(0.25, k);
  CHECK(value * value == doctest::Approx(20.0 / 27.0).epsilon(1e-12));
  CHECK(value * value == doctest::Approx(series).epsilon(1e-12));
}

TEST_CASE("hardy inequality on random model-space functions") {
  detail::DeterministicRng rng(22);
  double worst_excess = -1e300;
  for (int c = 0; c < 20; ++c) {
    const int n = 1 + static_cast<int>(rng.uniform01() * 6);
    std::vector<DiscPoint> poles;
    for (int k = 0; k < n; ++k) poles.emplace_back(rng.in_disc(0.85));
    const PoleConfiguration config(poles);
    const MalmquistWalshBasis basis(config,
                                    QuadratureSpec::for_config(config));
    for (int trial = 0; trial < 3; ++trial) {
      Eigen::VectorXcd coords(n);
      for (int k = 0; k < n; ++k) coords(k) = rng.normal();
      const Eigen::VectorXcd coefficients =
          basis.coefficient_matrix() * coords;
      std::vector<Complex> taylor(coefficients.data(),
                                  coefficients.data() + coefficients.size());
      const AnalyticFunction f =
          AnalyticFunction::from_coefficients(std::move(taylor));
      const double wiener = space_norm(f, FunctionSpace::wiener);
      const double h1 = space_norm(derivative(f), FunctionSpace::h1);
      worst_excess =
          std::max(worst_excess,
                   wiener - (std::numbers::pi * h1 + std::abs(f.taylor()[0])));
    }
  }
  CHECK(worst_excess <= tol::bound_slack);
}

TEST_CASE("cauchy-schwarz") {
  detail::DeterministicRng rng(23);
  for (int i = 0; i < 25; ++i) {
    const AnalyticFunction f = analyze_kernel(rng.in_disc(0.85));
    const AnalyticFunction g = analyze_kernel(rng.in_disc(0.85));
    const double lhs = std::abs(inner_product(f, g));
    const double rhs = space_norm(f, FunctionSpace::h2) *
                       space_norm(g, FunctionSpace::h2);
    CHECK(lhs <= rhs + 1e-12);
  }
}
