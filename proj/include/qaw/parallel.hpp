#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qaw {

// Heavy sweeps (identity x env grids, orbit enumerations) run either through
// the OpenMP kernel or the serial reference loop. Results are index-addressed
// by the callers, so both modes produce identical output; the serial path is
// kept as the comparison baseline for tests and the benchmark tool.
enum class ExecMode { Serial, Parallel };

template <typename F>
void for_each_index(std::size_t count, ExecMode mode, F&& f) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
    #pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < count; ++i) f(i);
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qaw
