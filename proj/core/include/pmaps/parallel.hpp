#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace pmaps {

// Runs f(i) for i in [0, count) over `threads` workers. Each index owns its
// outputs, so results are schedule-independent.
template <class F>
void run_indexed(std::int64_t count, int threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<std::int64_t>(threads, count);
  pool.reserve(n);
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

inline int default_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace pmaps
