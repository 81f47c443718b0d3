// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "detail/rng.hpp"
#include "doctest.h"
#include "kbnorm/bounds.hpp"
#include "kbnorm/errors.hpp"

using namespace kbnorm;

TEST_CASE("bracket coefficients") {
  const BoundCoefficients four = bound_coefficients(4, 0.0);
  CHECK(four.a_lower == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(four.A_upper == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(four.legacy_52 == doctest::Approx(10.0).epsilon(1e-12));

  const BoundCoefficients sixteen = bound_coefficients(16, 0.5);
  CHECK(sixteen.a_lower ==
        doctest::Approx(0.7216878364870323).epsilon(1e-12));
  CHECK(sixteen.A_upper == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(sixteen.legacy_52 == doctest::Approx(80.0).epsilon(1e-12));

  // min(3/4, 2/n) switches branch exactly at n = 2
  const BoundCoefficients two = bound_coefficients(2, 0.0);
  CHECK(two.a_lower == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(bound_coefficients(1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(bound_coefficients(4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bound_coefficients(4, -0.1), std::invalid_argument);
}

TEST_CASE("single-pole closed form") {
  CHECK(n1_exact_norm(DiscPoint(0.0)) == doctest::Approx(0.0));
  CHECK(n1_exact_norm(DiscPoint(0.5)) ==
        doctest::Approx(0.5773502691896258).epsilon(1e-12));
  CHECK(n1_exact_norm(DiscPoint(0.9)) ==
        doctest::Approx(2.0647416048350564).epsilon(1e-12));
}

TEST_CASE("confluent derivative norm closed form") {
  CHECK(confluent_derivative_norm_squared(2, 0.5) ==
        doctest::Approx(3.5 / 0.5625).epsilon(1e-14));
  CHECK(confluent_derivative_norm_squared(2, 0.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(confluent_derivative_norm_squared(10, 0.9) ==
        doctest::Approx(12161.218836565105).epsilon(1e-12));
  CHECK_THROWS_AS(confluent_derivative_norm_squared(0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(confluent_derivative_norm_squared(2, 1.0),
                  std::invalid_argument);
}

TEST_CASE("phi coefficients") {
  const auto three = phi_coefficients(3, 0.5);
  CHECK(three[0] == doctest::Approx(2.0));
  CHECK(three[1] == doctest::Approx(2.5));
  CHECK(three[2] == doctest::Approx(0.75));

  const auto two = phi_coefficients(2, 0.0);
  CHECK(two[0] == doctest::Approx(1.0));
  CHECK(two[1] == doctest::Approx(0.0));
  CHECK(two[2] == doctest::Approx(0.0));

  // boundary value r = 1 only exercises the algebra
  const auto five = phi_coefficients(5, 1.0);
  CHECK(five[0] == doctest::Approx(4.0));
  CHECK(five[1] == doctest::Approx(9.0));
  CHECK(five[2] == doctest::Approx(5.0));
}

TEST_CASE("phi coefficients assemble the norm closed form") {
  double worst = 0.0;
  for (int n : {2, 3, 5, 10, 100}) {
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
      const auto [c0, c1, c2] = phi_coefficients(n, r);
      const double assembled =
          (c0 * c0 + c1 * c1 + c2 * c2) / ((1.0 - r * r) * (1.0 - r * r));
      const double closed = confluent_derivative_norm_squared(n, r);
      worst = std::max(worst, std::abs(assembled - closed) / closed);
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("extremal certificate at (100, 0.5, 10)") {
  const ExtremalCertificate certificate = extremal_certificate(100, 0.5, 10);
  CHECK(certificate.q == doctest::Approx(201.0).epsilon(1e-14));
  CHECK(certificate.certified_lower ==
        doctest::Approx(234.05154917428388).epsilon(1e-12));
  CHECK(certificate.measured >= certificate.certified_lower);
  CHECK(certificate.f_norm_squared == doctest::Approx(13.0).epsilon(1e-12));
}

TEST_CASE("extremal certificate degenerate window") {
  const ExtremalCertificate certificate = extremal_certificate(10, 0.0, 0);
  CHECK(certificate.q == doctest::Approx(10.0));
  CHECK(certificate.certified_lower == doctest::Approx(0.0));
  CHECK(certificate.measured >= 0.0);
}

TEST_CASE("extremal certificate approaches the limit mechanism") {
  const ExtremalCertificate certificate = extremal_certificate(1000, 0.5, 30);
  CHECK(certificate.q == doctest::Approx(2181.0));
  const double limit_scale = 1000.0 * (1.0 + 0.5) / (1.0 - 0.5);
  CHECK(certificate.certified_lower / limit_scale >= 0.9);
  CHECK(certificate.measured >= certificate.certified_lower);
}

TEST_CASE("dyakonov bracket closed cases") {
  const DyakonovBracket half =
      dyakonov_bracket(PoleConfiguration{{DiscPoint(0.5)}});
  CHECK(half.sup_derivative == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(half.lower == doctest::Approx(0.013572291997303332).epsilon(1e-9));
  CHECK(half.upper == doctest::Approx(20.120348925342217).epsilon(1e-9));
  CHECK(half.norm == doctest::Approx(0.7453559924999299).epsilon(1e-9));
  CHECK(half.holds);

  const DyakonovBracket monomials =
      dyakonov_bracket(PoleConfiguration::confluent(DiscPoint(0.0), 8));
  CHECK(monomials.sup_derivative == doctest::Approx(8.0).epsilon(1e-10));
  CHECK(monomials.norm == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(monomials.holds);

  const DyakonovBracket nine =
      dyakonov_bracket(PoleConfiguration{{DiscPoint(0.9)}});
  CHECK(nine.sup_derivative == doctest::Approx(19.0).epsilon(1e-10));
  CHECK(nine.holds);
}

TEST_CASE("dyakonov bracket random configurations") {
  detail::DeterministicRng rng(41);
  for (int c = 0; c < 30; ++c) {
    const int n = 1 + static_cast<int>(rng.uniform01() * 16);
    std::vector<DiscPoint> poles;
    for (int k = 0; k < n; ++k) poles.emplace_back(rng.in_disc(0.9));
    CHECK(dyakonov_bracket(PoleConfiguration(poles)).holds);
  }
}

TEST_CASE("confluent report") {
  const BoundReport monomial = confluent_report(16, 0.0);
  CHECK(monomial.norm_confluent == doctest::Approx(15.0).epsilon(1e-10));
  CHECK(monomial.ratio == doctest::Approx(0.9375).epsilon(1e-10));

  const BoundReport two = confluent_report(2, 0.5);
  CHECK(two.norm_confluent >= std::sqrt(3.5 / 0.5625) - 1e-9);
  CHECK(two.ratio >= 0.6236 - 1e-4);
  CHECK(two.ratio <= two.A_upper + 1e-9);
}

TEST_CASE("convergence sweep is sorted and bounded") {
  const int ns[] = {4, 2};
  const double rs[] = {0.5, 0.0};
  const auto reports = convergence_sweep(ns, rs);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].n == 2);
  CHECK(reports[0].r == doctest::Approx(0.0));
  CHECK(reports[1].n == 2);
  CHECK(reports[1].r == doctest::Approx(0.5));
  CHECK(reports[3].n == 4);
  for (const BoundReport& report : reports)
    CHECK(report.ratio <= report.A_upper + 1e-9);
  CHECK_THROWS_AS(convergence_sweep(std::span<const int>{},
                                    std::span<const double>{}),
                  std::invalid_argument);
  const int bad_n[] = {1};
  const double ok_r[] = {0.5};
  CHECK_THROWS_AS(convergence_sweep(bad_n, ok_r), std::invalid_argument);
  const int ok_n[] = {4};
  const double bad_r[] = {0.99};
  CHECK_THROWS_AS(convergence_sweep(ok_n, bad_r), std::invalid_argument);
}

TEST_CASE("randomized configuration maximum") {
  CHECK(randomized_configuration_max(2, 0.0, 5, 1) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const double max_norm = randomized_configuration_max(4, 0.5, 10, 7);
  const double confluent =
      operator_norm(PoleConfiguration::confluent(DiscPoint(0.5), 4)).norm;
  CHECK(max_norm >= confluent - 1e-12);
  CHECK(max_norm <= 1.75 * 8.0 + 1e-8);

  CHECK(randomized_configuration_max(8, 0.9, 5, 3) <= 200.0 + 1e-8);

  // identical seeds reproduce the stream
  CHECK(randomized_configuration_max(4, 0.6, 8, 17) ==
        randomized_configuration_max(4, 0.6, 8, 17));
}

TEST_CASE("embedding ratios") {
  const int ns[] = {4, 16};
  const double rs[] = {0.0, 0.5};
  const auto besov =
      embedding_ratio_sweep(FunctionSpace::besov, 0.0, ns, rs, 10, 11);
  REQUIRE(besov.size() == 4);
  for (const EmbeddingRecord& record : besov)
    CHECK(record.max_ratio == doctest::Approx(1.0).epsilon(1e-12));

  const int single[] = {1};
  const double half[] = {0.5};
  const auto wiener =
      embedding_ratio_sweep(FunctionSpace::wiener, 0.0, single, half, 5, 2);
  // any f in the one-dimensional space is a multiple of the kernel:
  // ||k||_W / ||k||_2 = sqrt(3) at r = 1/2
  CHECK(wiener.front().max_ratio ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));

  const double zero[] = {0.0};
  const auto dirichlet =
      embedding_ratio_sweep(FunctionSpace::besov, 1.0, single, zero, 5, 2);
  CHECK(dirichlet.front().max_ratio == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      embedding_ratio_sweep(FunctionSpace::h2, 0.0, ns, rs, 5, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      embedding_ratio_sweep(FunctionSpace::besov, -1.0, ns, rs, 5, 1),
      std::invalid_argument);
}
