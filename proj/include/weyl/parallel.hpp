#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace weyl {

int threads();

/// Runs body(idx) for idx in [0, count) on up to threads() workers.
/// Indices are claimed in chunks; callers write only to per-index slots.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1, threads()), count);
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < count; ++idx) body(idx);
    return;
  }
  std::atomic<std::size_t> next{0};
  const std::size_t chunk = std::max<std::size_t>(1, count / (workers * 8));
  auto run = [&] {
    while (true) {
      std::size_t start = next.fetch_add(chunk);
      if (start >= count) return;
      std::size_t stop = std::min(count, start + chunk);
      for (std::size_t idx = start; idx < stop; ++idx) body(idx);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

}  // namespace weyl
