#pragma once

#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mplab {

// Thread cap: MPLAB_THREADS wins, then OpenMP's default, then 1.
inline int max_threads() {
    if (const char* env = std::getenv("MPLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Data-parallel loop over [0, n). Each body(i) must write only slot i of its
// outputs; under that contract the parallel result is bit-identical to the
// serial reference below.
template <class Body>
void parallel_for(long n, const Body& body) {
#ifdef _OPENMP
    int threads = max_threads();
    if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
#endif
    for (long i = 0; i < n; ++i) body(i);
}

// Serial reference path, kept so tests can compare against parallel_for.
template <class Body>
void serial_for(long n, const Body& body) {
    for (long i = 0; i < n; ++i) body(i);
}

}  // namespace mplab
