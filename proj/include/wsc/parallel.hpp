#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wsc {

inline int default_threads()
{
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Runs body(k) for k in [0, count) on up to `threads` workers. Results must
/// go to per-index slots so the outcome does not depend on scheduling. The
/// first exception thrown by any worker is rethrown here.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body&& body)
{
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k)
      body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        body(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back(run);
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

} // namespace wsc
