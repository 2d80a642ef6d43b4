#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hypertrace {

// Runs fn(worker, workers) on `workers` threads (inline when workers <= 1)
// and rethrows the first exception raised by any of them.
template <typename Fn>
void run_workers(unsigned workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0u, 1u);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          fn(w, workers);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hypertrace
