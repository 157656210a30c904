#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace golab {

/// Thread cap: min(hardware, GO_LAB_THREADS). GO_LAB_THREADS=1 forces serial.
inline int thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int n = hw == 0 ? 1 : int(hw);
  if (const char* env = std::getenv("GO_LAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

/// Runs fn(i) for i in [0, n) over a fixed chunk grid. Results must be written
/// to disjoint, preallocated slots so the outcome is order-independent.
inline void parallel_for(long n, const std::function<void(long)>& fn) {
  int t = thread_count();
  if (t <= 1 || n < 64) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  long chunk = (n + t - 1) / t;
  for (int k = 0; k < t; ++k) {
    long lo = k * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace golab
