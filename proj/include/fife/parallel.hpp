#pragma once
// Static block partition of an index range across hardware threads.
// Results must be collected into per-chunk slots to stay deterministic.

#include <cstddef>
#include <thread>
#include <vector>

namespace fife {

inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Calls chunk_fn(chunk_index, begin, end) on each of `chunks` contiguous
// blocks of [0, n), one thread per block.
template <class ChunkFn>
void parallel_chunks(std::size_t n, std::size_t chunks, ChunkFn&& chunk_fn) {
  if (chunks <= 1 || n <= 1) {
    chunk_fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  if (chunks > n) chunks = n;
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = n * c / chunks;
    std::size_t end = n * (c + 1) / chunks;
    threads.emplace_back([&chunk_fn, c, begin, end] { chunk_fn(c, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace fife
