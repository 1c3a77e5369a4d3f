#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace webgraph {

/// Node ranges are cut into chunks of this fixed size regardless of the worker
/// count, so any per-chunk partial result (and its merge order) is identical
/// for every worker count.
inline constexpr std::size_t kChunkSize = std::size_t{1} << 15;

/// Runs fn(worker, begin, end) over [0, n) in fixed-size chunks using up to
/// `workers` threads. Chunks are claimed dynamically; callers that need a
/// deterministic reduction must write per-chunk results and merge them by
/// chunk index afterwards (chunk index = begin / kChunkSize).
template <class Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn) {
  const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
  if (chunks == 0) return;
  const unsigned threads = static_cast<unsigned>(
      std::min<std::size_t>(std::max(1u, workers), chunks));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      fn(0u, c * kChunkSize, std::min(n, (c + 1) * kChunkSize));
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = next++; c < chunks; c = next++)
          fn(w, c * kChunkSize, std::min(n, (c + 1) * kChunkSize));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline std::size_t chunk_count(std::size_t n) { return (n + kChunkSize - 1) / kChunkSize; }

}  // namespace webgraph
