#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hv {

// HV_THREADS caps worker count; unset or malformed falls back to the OpenMP default.
// Builds without OpenMP always report 1.
inline int thread_count() {
#ifdef _OPENMP
  if (const char* env = std::getenv("HV_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hv
