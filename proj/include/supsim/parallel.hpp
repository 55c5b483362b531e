#pragma once

#include <cstddef>
#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supsim {

// Whether OpenMP support was compiled in.
inline bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Run fn(i) for i in [0, n). When enabled (and OpenMP is present) iterations
// run concurrently; they must write only to disjoint slots. The first
// exception (by lowest index) is rethrown, so error reporting matches the
// serial path exactly.
template <typename Fn>
void parallel_for_index(std::size_t n, bool enabled, Fn&& fn) {
#ifdef _OPENMP
  if (enabled && n > 1) {
    std::exception_ptr first_error = nullptr;
    std::size_t first_error_index = n;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        {
          if (static_cast<std::size_t>(i) < first_error_index) {
            first_error_index = static_cast<std::size_t>(i);
            first_error = std::current_exception();
          }
        }
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#else
  (void)enabled;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace supsim
