// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_BOUNDS_HPP_
#define KBNORM_BOUNDS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "kbnorm/model_space.hpp"

namespace kbnorm {

// Bracket coefficients for n >= 2:
//   a_lower = (1/(1+r)) (1 + 5r^4 - 4r^4/n - min(3/4, 2/n))^(1/2)
//   A_upper = 1 + r + 1/sqrt(n)
//   legacy_52 = (5/2) n/(1-r)   (absolute norm bound, not a coefficient)
struct BoundCoefficients {
  double a_lower;
  double A_upper;
  double legacy_52;
};

BoundCoefficients bound_coefficients(int n, double r);

// |l| (1/(1 - |l|^2))^(1/2).
double n1_exact_norm(DiscPoint pole);

// ||e_n'||_2^2 = ((n-1)^2 + (2n-1)^2 r^2 + n^2 r^4)/(1-r^2)^2.
double confluent_derivative_norm_squared(int n, double r);

// Coefficients (n-1, (2n-1) r, n r^2) of the quadratic whose coefficient
// norm gives ||e_n'||_2 (defined for any r >= 0, including r = 1, for
// algebraic identity checks).
std::array<double, 3> phi_coefficients(int n, double r);

struct ExtremalCertificate {
  int n = 0;
  int s = 0;
  double r = 0.0;
  double q = 0.0;  // (n-s) + 2r(n-s-1) + r^2 (n-s-2)
  double certified_lower = 0.0;
  double measured = 0.0;  // ||f'||_2 / ||f||_2 on the alternating test function
  double f_norm_squared = 0.0;
};

// certified_lower = (sqrt(s) q - r(1+r) sqrt(s+3)) / ((1-r^2) sqrt(s+3));
// the measured ratio is guaranteed to dominate it.
ExtremalCertificate extremal_certificate(int n, double r, int s);

// With c = 2 sqrt(3 pi), a = 1/(36 c), A = (36 + c)/(2 pi):
//   a ||B'||_inf <= ||D|| <= A ||B'||_inf.
struct DyakonovBracket {
  double lower = 0.0;
  double upper = 0.0;
  double sup_derivative = 0.0;
  double norm = 0.0;
  bool holds = false;
};

// grid_size = 0 picks the policy grid for the configuration.
DyakonovBracket dyakonov_bracket(const PoleConfiguration& config,
                                 int grid_size = 0);

struct BoundReport {
  int n = 0;
  double r = 0.0;
  double norm_confluent = 0.0;  // ||D|| at {r, ..., r}
  double a_lower = 0.0;
  double A_upper = 0.0;
  double legacy_52 = 0.0;
  double ratio = 0.0;  // (1-r) norm_confluent / n
};

BoundReport confluent_report(int n, double r);

// One report per (n, r) cell, sorted by (n, r) ascending; cells are
// independent and may be computed in parallel (threads = 0 picks the
// KBNORM_THREADS override or the hardware count).
std::vector<BoundReport> convergence_sweep(std::span<const int> n_list,
                                           std::span<const double> r_list,
                                           int threads = 0);

// Max operator norm over `trials` area-uniform random configurations in the
// closed disc of radius r, plus the confluent and all-zero configurations.
// Every sample is checked against the upper bounds.
double randomized_configuration_max(int n, double r, int trials,
                                    std::uint64_t seed);

struct EmbeddingRecord {
  FunctionSpace space = FunctionSpace::besov;
  double s = 0.0;
  int n = 0;
  double r = 0.0;
  int trials = 0;
  double max_ratio = 0.0;   // max over trials of ||f||_space / ||f||_2
  double normalized = 0.0;  // max_ratio / (n/(1-r))^s, or / (n^2/(1-r))^(1/2)
};

// Ratio study over random functions of the confluent model space (random
// coordinates in the Malmquist-Walsh basis). Only finiteness and the s = 0
// identity are asserted; the normalized constants are emitted for inspection.
std::vector<EmbeddingRecord> embedding_ratio_sweep(
    FunctionSpace space, double s, std::span<const int> n_list,
    std::span<const double> r_list, int trials, std::uint64_t seed);

}  // namespace kbnorm

#endif  // KBNORM_BOUNDS_HPP_
