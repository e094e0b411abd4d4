#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ringlab {

/// Splits [first, last) into `threads` contiguous chunks and runs
/// fn(chunk_index, begin, end) on each, one thread per chunk. Results must be
/// merged by the caller in chunk order so output never depends on timing.
/// The first exception thrown by any chunk is rethrown.
template <class Fn>
void parallel_chunks(std::uint64_t first, std::uint64_t last, unsigned threads, Fn&& fn) {
  const std::uint64_t count = last > first ? last - first : 0;
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2 * threads) {
    fn(0u, first, last);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t step = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t b = first + t * step;
    std::uint64_t e = std::min(last, b + step);
    pool.emplace_back([&, t, b, e] {
      try {
        if (b < e) fn(t, b, e);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

/// Number of chunks parallel_chunks will use for the given range.
inline unsigned chunk_count(std::uint64_t first, std::uint64_t last, unsigned threads) {
  const std::uint64_t count = last > first ? last - first : 0;
  threads = std::max(1u, threads);
  return (threads == 1 || count < 2 * threads) ? 1u : threads;
}

}  // namespace ringlab
