#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace csrec {

// Worker count: CSREC_THREADS if set, else hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("CSREC_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n). Each index writes only its own slot, so results
// are identical for any worker count; reductions happen afterwards in index
// order.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  int workers = thread_count();
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  if (workers > n) workers = n;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace csrec
