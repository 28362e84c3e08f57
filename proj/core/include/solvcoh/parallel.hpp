#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace solvcoh {

/// Worker count used by block-parallel routines (default 1).
int parallelism();
void set_parallelism(int jobs);

/// Runs f(i) for i in [0, count) on up to parallelism() threads. Each index
/// is processed exactly once; the first exception is rethrown.
template <class F>
void parallel_for(int count, F&& f) {
  const int jobs = std::min(parallelism(), count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace solvcoh
