#ifndef STIN_PARALLEL_HPP
#define STIN_PARALLEL_HPP

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace stin {

inline int hardware_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Parallel map over [0, n). Each index writes its own output slot, so the
// result is bit-identical for any thread count. threads <= 1 runs the plain
// serial loop (the reference path used by the equivalence tests).
template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
#if defined(_OPENMP)
    if (threads > 1 && n > 1) {
#pragma omp parallel for num_threads(threads) schedule(static)
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#else
    (void)threads;
#endif
    for (int i = 0; i < n; ++i) fn(i);
}

}  // namespace stin

#endif
