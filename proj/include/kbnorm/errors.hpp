// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_ERRORS_HPP_
#define KBNORM_ERRORS_HPP_

#include <stdexcept>

namespace kbnorm {

// Evaluation hit a pole of a Blaschke factor. Cannot happen for |z| <= 1
// and poles inside the open disc; signals invalid input.
class EvaluationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sampled function has non-negligible negative-frequency content: it is not
// analytic in the disc, or the sample count is too small for its decay.
class AnalyticityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The eigenvalue solve did not reach its residual tolerance.
class ConvergenceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematically guaranteed inequality failed numerically.
class InvariantViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace kbnorm

#endif  // KBNORM_ERRORS_HPP_
