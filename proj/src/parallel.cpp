#include "oliver/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oliver::parallel {

int thread_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("OLIVER_EXCLUDE_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
    } catch (...) {
      // ignore malformed values
    }
  }
  return n < 1 ? 1 : n;
}

bool enabled() {
#ifdef _OPENMP
  return thread_count() > 1;
#else
  return false;
#endif
}

}  // namespace oliver::parallel
