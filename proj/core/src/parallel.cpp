#include "solvcoh/parallel.hpp"

namespace solvcoh {

namespace {
std::atomic<int> g_jobs{1};
}

int parallelism() { return g_jobs.load(); }

void set_parallelism(int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  g_jobs.store(jobs);
}

}  // namespace solvcoh
