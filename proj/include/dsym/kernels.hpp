#pragma once

// Sums over the symmetric group. Each kernel comes as a serial reference and
// an OpenMP version that splits S_n into rank blocks; both return identical
// polynomials since the arithmetic is exact and the merge order is fixed.

#include "dsym/polynomial.hpp"

namespace dsym::kernels {

Polynomial symmetrize_serial(const Polynomial& f);
Polynomial symmetrize_parallel(const Polynomial& f);

Polynomial antisymmetrize_serial(const Polynomial& f);
Polynomial antisymmetrize_parallel(const Polynomial& f);

/// Smallest n for which the public entry points use the parallel kernels,
/// provided more than one thread is available.
inline constexpr int kParallelThreshold = 5;

/// Number of rank blocks used to split S_n: a few per available thread.
int block_count(int n);

/// Threads OpenMP would use; 1 without OpenMP.
int available_threads();

} // namespace dsym::kernels
