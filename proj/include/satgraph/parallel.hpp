#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace satgraph {

/// Sanitized worker count: requested <= 0 means hardware parallelism.
inline int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(begin, end, worker_index) over contiguous chunks of [0, total).
/// With threads <= 1 (or a tiny range) the call is inline on this thread.
template <typename Fn>
inline void parallel_chunks(std::size_t total, int threads, Fn&& fn) {
  if (total == 0) return;
  std::size_t workers = static_cast<std::size_t>(threads < 1 ? 1 : threads);
  if (workers > total) workers = total;
  if (workers <= 1) {
    fn(std::size_t{0}, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, static_cast<int>(w)); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace satgraph
