#ifndef PDARRAY_RUNMODE_HPP
#define PDARRAY_RUNMODE_HPP

#include <cstddef>

namespace pdarray {

// Serial is the reference lane; Parallel uses OpenMP when compiled in.
// Kernels are written so both lanes produce bit-identical results
// (fixed work decomposition, ordered reduction).
enum class RunMode { Serial, Parallel };

// Index loop over [0, n). Results must be written to disjoint slots;
// reductions are done by the caller in index order.
template <class Fn>
inline void for_each_index(std::size_t n, RunMode mode, const Fn& fn) {
    if (mode == RunMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

} // namespace pdarray

#endif
