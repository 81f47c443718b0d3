// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_TOLERANCES_HPP_
#define KBNORM_TOLERANCES_HPP_

namespace kbnorm {

// Central tolerance record. All arithmetic is standard double precision;
// every inequality check in the library and its verification suite draws
// its slack from here.
namespace tol {

inline constexpr double circle_slack = 1e-9;        // |z| <= 1 + slack accepted
inline constexpr double pole_denominator = 1e-12;   // |1 - conj(l) z| guard
inline constexpr double unimodularity = 1e-12;
inline constexpr double orthonormality = 1e-10;
inline constexpr double hermitian_defect = 1e-12;
inline constexpr double psd_slack = 1e-10;
inline constexpr double eigen_residual = 1e-10;
inline constexpr double analyticity = 1e-10;
inline constexpr double kernel_oracle = 1e-12;
inline constexpr double closed_form_rel = 1e-8;
inline constexpr double expansion_residual = 1e-8;
inline constexpr double bound_slack = 1e-8;
inline constexpr double symmetry_slack = 1e-9;
inline constexpr double norm_identity = 1e-10;
inline constexpr double exact_identity = 1e-12;

}  // namespace tol

// Circle-quadrature sizing. Taylor coefficients of K_B functions decay like
// r^k, so M >= 64 n/(1-r) pushes aliasing below 1e-14.
namespace quadrature_policy {

inline constexpr int min_samples = 4096;
inline constexpr int samples_per_unit = 64;  // M >= samples_per_unit * n/(1-r)
inline constexpr int min_grid = 64;

}  // namespace quadrature_policy

}  // namespace kbnorm

#endif  // KBNORM_TOLERANCES_HPP_
