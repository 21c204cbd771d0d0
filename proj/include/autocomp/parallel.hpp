#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace autocomp {

// Runs work(i) for i in [0, count) across up to `jobs` threads and returns
// the results in index order, so any subsequent fold is schedule-independent.
// Each worker must be pure with respect to shared state (workers typically
// own a searcher instance each).
template <class R>
std::vector<R> run_indexed(int count, int jobs, const std::function<R(int)>& work) {
  std::vector<R> results(static_cast<std::size_t>(count));
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = work(i);
    return results;
  }
  const int workers = std::min(jobs, count);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::mutex error_mu;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          results[static_cast<std::size_t>(i)] = work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

}  // namespace autocomp
