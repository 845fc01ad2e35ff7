#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace solcon {

/// Smallest i in [0, n) with pred(i), or n if there is none. Chunks are
/// claimed through an atomic counter and the minimum is kept globally, so
/// the answer is independent of `jobs`. The first exception thrown by a
/// worker is rethrown.
template <class Pred>
std::size_t parallel_find_first(std::size_t n, unsigned jobs, Pred&& pred,
                                std::size_t chunk = 64) {
  if (jobs <= 1 || n <= chunk) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return n;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      while (true) {
        const auto start = next.fetch_add(chunk);
        if (start >= n || start >= best.load()) return;
        const auto stop = std::min(n, start + chunk);
        for (std::size_t i = start; i < stop && i < best.load(); ++i) {
          if (!pred(i)) continue;
          auto cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> pool;
  const auto count = std::min<std::size_t>(jobs, (n + chunk - 1) / chunk);
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return best.load();
}

}  // namespace solcon
