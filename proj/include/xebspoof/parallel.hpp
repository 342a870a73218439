#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace xeb {

/// Runs fn(k) for k in [0, count) on up to `workers` threads. Work is handed
/// out by an atomic counter; callers write results into slot k so the outcome
/// does not depend on scheduling. The first exception thrown is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn &&fn) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k)
      fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= count)
        return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned spawned = static_cast<unsigned>(
      std::min<std::size_t>(workers, count));
  pool.reserve(spawned);
  for (unsigned w = 0; w < spawned; ++w)
    pool.emplace_back(body);
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace xeb
