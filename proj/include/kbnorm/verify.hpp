// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_VERIFY_HPP_
#define KBNORM_VERIFY_HPP_

#include <functional>
#include <string>

namespace kbnorm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the library invariant suite in a fixed order with fixed seeds and
// reports each check through the callback. Returns the number of failures.
int run_verification(const std::function<void(const CheckResult&)>& report);

}  // namespace kbnorm

#endif  // KBNORM_VERIFY_HPP_
