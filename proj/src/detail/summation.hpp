// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_DETAIL_SUMMATION_HPP_
#define KBNORM_DETAIL_SUMMATION_HPP_

#include <cstddef>

namespace kbnorm::detail {

// Pairwise reduction with a fixed split; the summation order is independent
// of scheduling, which keeps quadrature sums reproducible.
template <class Value, class Term>
Value pairwise_sum(std::size_t begin, std::size_t end, const Term& term) {
  const std::size_t count = end - begin;
  if (count <= 32) {
    Value acc{};
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = begin + count / 2;
  return pairwise_sum<Value>(begin, mid, term) +
         pairwise_sum<Value>(mid, end, term);
}

}  // namespace kbnorm::detail

#endif  // KBNORM_DETAIL_SUMMATION_HPP_
