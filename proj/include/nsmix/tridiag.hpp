#pragma once

#include <span>
#include <vector>

namespace nsmix {

/// Solves the periodic tridiagonal system A x = rhs. Row i reads
///   lower[i] * x[i-1] + diag[i] * x[i] + upper[i] * x[i+1] = rhs[i]
/// with indices mod n, so lower[0] and upper[n-1] are the corner
/// entries. Requires n >= 3 and strict diagonal dominance; the
/// returned solution satisfies |A x - rhs|_inf <= tol * |rhs|_inf.
///
/// O(n) Sherman-Morrison rank-one correction of two non-periodic
/// Thomas sweeps, followed by at most one iterative-refinement pass.
std::vector<double> cyclic_tridiag_solve(std::span<const double> lower,
                                         std::span<const double> diag,
                                         std::span<const double> upper,
                                         std::span<const double> rhs,
                                         double tol = 1e-12);

} // namespace nsmix
