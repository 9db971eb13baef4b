#ifndef NULLWIDTH_PARALLEL_HPP
#define NULLWIDTH_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nw {

/**
 * Execution policy for the per-cell kernels.  Every kernel has one code path;
 * Serial runs it on one thread and is kept as the reference implementation the
 * tests and the benchmark compare against.  Results are identical either way:
 * the arithmetic is exact and each iteration writes only its own slot.
 */
enum class Exec { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

template <typename Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace nw

#endif
