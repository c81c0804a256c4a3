#ifndef BLOCKSETS_PARALLEL_HPP
#define BLOCKSETS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace blocksets {

inline std::size_t default_workers() noexcept {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Runs task(i) for every i in [0, tasks). Workers claim indices from a
/// shared counter, so callers must write results into per-task slots and
/// merge them in index order afterwards. The first exception is rethrown.
template <class F>
void parallel_for(std::size_t tasks, std::size_t workers, F&& task) {
  if (workers == 0) workers = default_workers();
  workers = std::min(workers, tasks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < tasks;) task(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(tasks);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

/// Splits [0, total) into at most `parts` contiguous, nearly equal ranges.
inline std::vector<std::pair<std::size_t, std::size_t>> split_ranges(std::size_t total, std::size_t parts) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (total == 0) return out;
  parts = std::clamp<std::size_t>(parts, 1, total);
  std::size_t base = total / parts, extra = total % parts, lo = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    std::size_t len = base + (p < extra ? 1 : 0);
    out.emplace_back(lo, lo + len);
    lo += len;
  }
  return out;
}

}  // namespace blocksets

#endif  // BLOCKSETS_PARALLEL_HPP
