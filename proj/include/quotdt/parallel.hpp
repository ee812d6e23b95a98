#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quotdt {

/// Worker count: explicit request, else QUOTDT_THREADS, else the OpenMP
/// default (1 without OpenMP).
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QUOTDT_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace quotdt
