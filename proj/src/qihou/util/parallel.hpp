#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qihou {

/// Worker count for parallel scans: QIHOU_THREADS if set and positive, else
/// the hardware concurrency, else 1.
inline unsigned scan_thread_count() {
  if (const char* env = std::getenv("QIHOU_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? hc : 1;
}

/// Runs body(i) for i in [0, count) across workers. Each index writes only
/// its own output slot, so results are identical to a sequential run
/// regardless of scheduling.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned workers = scan_thread_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qihou
