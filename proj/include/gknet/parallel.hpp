#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gknet {

/// Worker count: GKNET_THREADS env var when set, otherwise the hardware
/// concurrency. This is the only environment variable the library reads.
inline int thread_count() {
  if (const char* env = std::getenv("GKNET_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for every i in [begin, end), splitting the range into
/// contiguous chunks across threads. Iterations must be independent; callers
/// that need a deterministic reduction combine per-index buffers afterwards
/// in index order.
template <typename Fn>
void parallel_for(int begin, int end, Fn&& fn) {
  const int n = end - begin;
  if (n <= 0) return;
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + w * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn]() {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace gknet
