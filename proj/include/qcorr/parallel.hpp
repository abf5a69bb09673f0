// SPDX-License-Identifier: Apache-2.0
//
// Small OpenMP helpers.  The pragma macro expands to nothing when OpenMP is
// disabled, so kernels stay free of #ifdef noise.

#pragma once

#if defined(_OPENMP)
#include <omp.h>

#define QCORR_PRAGMA(x) _Pragma(#x)
#define QCORR_PRAGMA_OMP(x) QCORR_PRAGMA(omp x)

#else

#define QCORR_PRAGMA_OMP(x)

#endif

namespace qcorr::parallel {

// Maximum number of threads a parallel region may use.
inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#if defined(_OPENMP)
  omp_set_num_threads(n > 0 ? n : 1);
#else
  (void)n;
#endif
}

inline bool enabled() {
#if defined(_OPENMP)
  return true;
#else
  return false;
#endif
}

}  // namespace qcorr::parallel
