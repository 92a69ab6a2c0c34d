#ifndef SPECLAB_PARALLEL_HPP
#define SPECLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace speclab {

/// Worker count resolution: 0 means "hardware concurrency", and the
/// SPECLAB_MAX_WORKERS environment variable caps the result either way.
inline std::size_t resolve_workers(std::size_t requested) {
  std::size_t workers = requested;
  if (workers == 0) {
    workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  if (const char* cap_text = std::getenv("SPECLAB_MAX_WORKERS")) {
    try {
      const auto cap = static_cast<std::size_t>(std::stoull(cap_text));
      if (cap >= 1) workers = std::min(workers, cap);
    } catch (const std::exception&) {
      // unparseable cap: ignore rather than fail a long run over an env var
    }
  }
  return std::max<std::size_t>(1, workers);
}

/// Runs fn(i) for i in [0, count) on up to `workers` threads, dispatching
/// indices through a shared atomic counter. Results must be written into
/// per-index slots by the caller, which keeps every reduction independent
/// of the worker count. The first exception is captured and rethrown on
/// the calling thread after all workers join.
inline void parallel_for(std::size_t count, std::size_t workers,
                         const std::function<void(std::size_t)>& fn) {
  workers = std::min(resolve_workers(workers), count);
  if (count == 0) return;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto drain = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace speclab

#endif  // SPECLAB_PARALLEL_HPP
