// SPDX-License-Identifier: Apache-2.0

#ifndef KBNORM_DETAIL_PARALLEL_HPP_
#define KBNORM_DETAIL_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kbnorm::detail {

inline int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KBNORM_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(i) for i in [0, count) over a pool of workers. Each index is an
// independent computation writing to its own slot, so results do not depend
// on the schedule. The first exception is rethrown on the caller.
template <class Body>
void parallel_for(std::size_t count, int threads, const Body& body) {
  const int workers =
      std::min<std::size_t>(std::max(1, thread_count(threads)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace kbnorm::detail

#endif  // KBNORM_DETAIL_PARALLEL_HPP_
