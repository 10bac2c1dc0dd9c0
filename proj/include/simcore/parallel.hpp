#pragma once

#include <cstddef>

namespace simcore {

/// Worker threads used by the parallel kernels. Honors SIMCORE_THREADS when set
/// to a positive integer; otherwise the OpenMP default. Always 1 without OpenMP.
int thread_count() noexcept;

/// Overrides the worker count for subsequent kernel calls (0 restores the default).
void set_thread_count(int n) noexcept;

}  // namespace simcore
