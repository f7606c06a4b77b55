#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lfr {

/// 0 means one worker per hardware thread.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs body(begin, end, worker) over contiguous chunks of [0, count).
/// The first exception thrown by any worker is rethrown on the caller.
template <class Body>
void parallel_chunks(std::uint64_t count, unsigned threads, Body&& body) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), count));
  if (workers == 1) {
    body(std::uint64_t{0}, count, 0u);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(count, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end, w] {
        try {
          body(begin, end, static_cast<unsigned>(w));
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace lfr
