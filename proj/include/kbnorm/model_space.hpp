// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_MODEL_SPACE_HPP_
#define KBNORM_MODEL_SPACE_HPP_

#include <Eigen/Dense>
#include <memory>
#include <span>
#include <vector>

#include "kbnorm/hardy.hpp"

namespace kbnorm {

// Orthonormal basis of the model space K_B in pole order,
//
//   e_k(z) = sqrt(1 - |l_k|^2)/(1 - conj(l_k) z) * prod_{j<k} b_{l_j}(z),
//
// with analytic derivative evaluators (product rule over the factors; no
// numeric differencing anywhere).
class MalmquistWalshBasis {
 public:
  MalmquistWalshBasis(PoleConfiguration config, QuadratureSpec spec);

  int size() const { return config_.degree(); }
  const PoleConfiguration& config() const { return config_; }
  const QuadratureSpec& spec() const { return spec_; }
  const std::vector<AnalyticFunction>& elements() const { return elements_; }

  // Closed-form value of e_{index+1}; valid on the closed disc.
  Complex element_value(int index, Complex z) const;
  // Analytic derivative of e_{index+1} by product rule; finite everywhere on
  // the closed disc, including the zeros of the leading Blaschke factors.
  Complex element_derivative(int index, Complex z) const;

  // All element values (resp. derivatives) at one point in O(n). The
  // derivative variant uses the logarithmic-derivative form and requires z
  // away from the poles of the configuration (always true for |z| = 1).
  void element_values(Complex z, std::span<Complex> out) const;
  void element_derivatives(Complex z, std::span<Complex> out) const;

  // M x n matrix; column k holds the Taylor coefficients of e_{k+1}.
  const Eigen::MatrixXcd& coefficient_matrix() const { return coefficients_; }
  // M x n matrix of derivative coefficients (coefficient shift per column).
  Eigen::MatrixXcd derivative_coefficients() const;

 private:
  PoleConfiguration config_;
  QuadratureSpec spec_;
  std::vector<AnalyticFunction> elements_;
  Eigen::MatrixXcd coefficients_;
};

MalmquistWalshBasis build_basis(const PoleConfiguration& config,
                                const QuadratureSpec& spec);

// Hermitian positive-semidefinite matrix with
// matrix(j, k) = (e_{k+1}', e_{j+1}')_{H^2}.
struct DerivativeGram {
  Eigen::MatrixXcd matrix;
  PoleConfiguration config;
};

DerivativeGram derivative_gram(const MalmquistWalshBasis& basis);

// For the confluent configuration {r, ..., r} the substitution v = b_r(u)
// turns f' into a polynomial identity: with coordinates a_k = (f, e_k),
//
//   (1-r^2)^2 ||f'||^2 = || r(1-rv) A(v) - (1-rv)^2 B(v) ||^2,
//   A(v) = sum a_{k+1} v^k,  B(v) = sum (k+1) a_{k+2} v^k.
//
// confluent_derivative_map returns that banded linear map T (rows = polynomial
// coefficients), so the derivative Gram is T^T T/(1-r^2)^2, exactly.
Eigen::MatrixXd confluent_derivative_map(int degree, double r);
Eigen::MatrixXd confluent_derivative_gram(int degree, double r);

// The two polynomial pieces r(1-rv) A(v) and (1-rv)^2 B(v) for given
// coordinates; their difference equals confluent_derivative_map * a.
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> confluent_expansion_parts(
    std::span<const Complex> coordinates, double r);

struct OperatorNormResult {
  double norm = 0.0;        // ||D||_{K_B -> H^2} = sqrt(lambda_max)
  double lambda_max = 0.0;  // largest eigenvalue of the derivative Gram
  int iterations = 0;       // Householder steps of the direct solve
  double residual = 0.0;    // ||G v - lambda v|| / max(lambda, 1)
  int dimension = 0;
};

// Largest eigenvalue of the derivative Gram; deterministic for fixed inputs.
// Confluent configurations use the exact banded assembly (rotation of the
// poles leaves the norm unchanged); all others go through quadrature.
OperatorNormResult operator_norm(const PoleConfiguration& config);
OperatorNormResult operator_norm(const PoleConfiguration& config,
                                 const QuadratureSpec& spec);

// f = sum_{k=0}^{s+2} (-1)^k e_{n-k} on a confluent configuration with real
// nonnegative pole; s even, n >= s+3. ||f||_2^2 = s+3.
AnalyticFunction test_function(const PoleConfiguration& config, int s);

struct ExpansionResiduals {
  double derivative_identity = 0.0;  // max over the grid of |f' - expansion|
  double norm_identity = 0.0;  // |quadrature ||f'||^2 - coefficient value|
};

// Evaluates the confluent derivative expansion of f' against the direct
// derivative on the circle grid, and the quadrature norm of f' against the
// substituted polynomial value. f is given by coordinates in the basis.
ExpansionResiduals verify_derivative_expansion(
    const PoleConfiguration& config, std::span<const Complex> coordinates);

}  // namespace kbnorm

#endif  // KBNORM_MODEL_SPACE_HPP_
