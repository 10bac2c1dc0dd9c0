#include "simcore/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace simcore {

namespace {

std::atomic<int> override_threads{0};

int env_threads() noexcept {
  const char* v = std::getenv("SIMCORE_THREADS");
  if (v == nullptr) return 0;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  return (end != v && *end == '\0' && n > 0 && n < 4096) ? static_cast<int>(n) : 0;
}

}  // namespace

int thread_count() noexcept {
#ifdef _OPENMP
  if (int n = override_threads.load(); n > 0) return n;
  if (int n = env_threads(); n > 0) return n;
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_thread_count(int n) noexcept { override_threads.store(n > 0 ? n : 0); }

}  // namespace simcore
