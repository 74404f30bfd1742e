#pragma once

// Internal symmetric tridiagonal eigensolver. Everything here runs in
// long double: the residual contract downstream is ||D h - lambda h|| <=
// 1e-10 |lambda| with |lambda| ~ 10 while ||D|| ~ 4/h^2 can reach 1e7, which
// leaves no headroom for a double-precision pipeline. Bisection with Sturm
// counts locates the eigenvalues; inverse iteration with a partially
// pivoted tridiagonal LU recovers the vectors.

#include <cstddef>
#include <vector>

namespace relalt::detail {

struct TridiagEigen {
    std::vector<long double> values;                // descending
    std::vector<std::vector<long double>> vectors;  // unit norm, values-aligned
    int iterations = 0;          // total inverse-iteration sweeps
    long double max_residual = 0.0L;  // worst ||T v - lambda v||_2 seen
};

/// The `count` algebraically largest eigenpairs of the symmetric
/// tridiagonal matrix with diagonal `d` (size n) and off-diagonal `e`
/// (size n-1). Requires 1 <= count <= n.
TridiagEigen largest_eigenpairs(const std::vector<long double>& d,
                                const std::vector<long double>& e,
                                std::size_t count);

}  // namespace relalt::detail
