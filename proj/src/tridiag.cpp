#include "nsmix/tridiag.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "nsmix/errors.hpp"

namespace nsmix {
namespace {

// Plain Thomas sweep for the non-periodic part; a(0) and c(n-1) are ignored.
void thomas_solve(std::span<const double> a, std::span<const double> b,
                  std::span<const double> c, std::span<const double> d,
                  std::vector<double>& work, std::vector<double>& x) {
    const std::size_t n = b.size();
    work[0] = c[0] / b[0];
    x[0] = d[0] / b[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double m = b[i] - a[i] * work[i - 1];
        work[i] = c[i] / m;
        x[i] = (d[i] - a[i] * x[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] -= work[i] * x[i + 1];
}

void residual(std::span<const double> lower, std::span<const double> diag,
              std::span<const double> upper, std::span<const double> rhs,
              const std::vector<double>& x, std::vector<double>& r, double& norm) {
    const std::size_t n = diag.size();
    norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t im = (i + n - 1) % n;
        const std::size_t ip = (i + 1) % n;
        r[i] = rhs[i] - (lower[i] * x[im] + diag[i] * x[i] + upper[i] * x[ip]);
        norm = std::max(norm, std::abs(r[i]));
    }
}

// One Sherman-Morrison cyclic solve. The corner entries alpha = lower[0]
// (row 0, col n-1) and beta = upper[n-1] (row n-1, col 0) are folded into
// the rank-one update u v^T with u = (g, 0, ..., 0, beta), v = (1, 0, ..., 0, alpha/g).
void cyclic_solve_once(std::span<const double> lower, std::span<const double> diag,
                       std::span<const double> upper, std::span<const double> d,
                       std::vector<double>& b1, std::vector<double>& uvec,
                       std::vector<double>& work, std::vector<double>& y,
                       std::vector<double>& z, std::vector<double>& x) {
    const std::size_t n = diag.size();
    const double alpha = lower[0];
    const double beta = upper[n - 1];
    const double g = -diag[0];

    for (std::size_t i = 0; i < n; ++i) b1[i] = diag[i];
    b1[0] -= g;
    b1[n - 1] -= alpha * beta / g;

    thomas_solve(lower, b1, upper, d, work, y);
    for (std::size_t i = 0; i < n; ++i) uvec[i] = 0.0;
    uvec[0] = g;
    uvec[n - 1] = beta;
    thomas_solve(lower, b1, upper, uvec, work, z);

    const double num = y[0] + (alpha / g) * y[n - 1];
    const double den = 1.0 + z[0] + (alpha / g) * z[n - 1];
    const double fact = num / den;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] - fact * z[i];
}

} // namespace

std::vector<double> cyclic_tridiag_solve(std::span<const double> lower,
                                         std::span<const double> diag,
                                         std::span<const double> upper,
                                         std::span<const double> rhs, double tol) {
    const std::size_t n = diag.size();
    if (n < 3)
        throw std::invalid_argument("cyclic_tridiag_solve: n < 3");
    if (lower.size() != n || upper.size() != n || rhs.size() != n)
        throw std::invalid_argument("cyclic_tridiag_solve: size mismatch");
    double rhs_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::abs(diag[i]) > std::abs(lower[i]) + std::abs(upper[i])))
            throw std::invalid_argument("cyclic_tridiag_solve: matrix not strictly diagonally dominant");
        rhs_norm = std::max(rhs_norm, std::abs(rhs[i]));
    }

    std::vector<double> b1(n), uvec(n), work(n), y(n), z(n), x(n), r(n), dx(n);
    cyclic_solve_once(lower, diag, upper, rhs, b1, uvec, work, y, z, x);

    const double bound = tol * rhs_norm;
    double rnorm;
    residual(lower, diag, upper, rhs, x, r, rnorm);
    if (rnorm > bound) {
        cyclic_solve_once(lower, diag, upper, r, b1, uvec, work, y, z, dx);
        for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
        residual(lower, diag, upper, rhs, x, r, rnorm);
        if (rnorm > bound)
            throw SolverError("cyclic_tridiag_solve: residual above tolerance after refinement");
    }
    return x;
}

} // namespace nsmix
