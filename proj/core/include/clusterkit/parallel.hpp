#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace clusterkit {

// Worker count used by the parallel helpers; 0 means hardware concurrency.
void set_thread_count(int threads);
int thread_count();

// fn(i) for i in [0, count), partitioned over the configured workers. Each
// index must be independent of the others; results keyed by index are
// schedule-independent.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  int workers = thread_count();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::size_t w = std::min<std::size_t>(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += w) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace clusterkit
