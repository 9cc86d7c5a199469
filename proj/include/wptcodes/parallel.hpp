#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wpt {

/// 0 means "use available parallelism".
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs fn(i) for every i in [0, count) on up to `threads` workers. Tasks are
/// claimed dynamically; if any task throws, the exception from the lowest task
/// index is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex err_mu;
  std::size_t err_index = count;
  std::exception_ptr err;
  auto work = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
        failed = true;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  pool.clear();
  if (err) std::rethrow_exception(err);
}

/// parallel_for that collects fn(i) into a vector ordered by i.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, threads, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace wpt
