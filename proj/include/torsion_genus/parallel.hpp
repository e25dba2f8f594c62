#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace torsion_genus {

/// Worker cap: TORSION_GENUS_THREADS when set (minimum 1), else the
/// hardware concurrency.
inline unsigned thread_limit() {
  if (const char* env = std::getenv("TORSION_GENUS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, n) into contiguous chunks, one per worker. fn(begin, end)
/// must be safe to run concurrently on disjoint ranges.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  unsigned workers = thread_limit();
  if (n == 0) return;
  if (workers <= 1 || n < 2) {
    fn(std::size_t{0}, n);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> threads;
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace torsion_genus
