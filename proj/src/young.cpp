#include "nsmix/young.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nsmix/errors.hpp"
#include "nsmix/kernels.hpp"
#include "nsmix/macro_solver.hpp"
#include "nsmix/periodic_ops.hpp"
#include "nsmix/resample.hpp"

namespace nsmix {

TwoDiracMeasure TwoDiracMeasure::from_state(const MacroLagState& s) {
    TwoDiracMeasure m;
    const int n = s.n();
    m.alpha_plus.resize(n);
    m.rho_plus.resize(n);
    m.rho_minus.resize(n);
    for (int i = 0; i < n; ++i) {
        m.alpha_plus[i] = s.alpha_plus[i];
        m.rho_plus[i] = s.rho_plus(i);
        m.rho_minus[i] = s.rho_minus(i);
    }
    return m;
}

std::vector<Beta> default_moment_family() {
    return {Beta::one,    Beta::color,         Beta::rho,    Beta::color_rho, Beta::rho_sq,
            Beta::inv_mu, Beta::r_rho_over_mu, Beta::cv_rho, Beta::inv_kappa};
}

std::string beta_name(Beta b) {
    switch (b) {
        case Beta::one: return "one";
        case Beta::color: return "c";
        case Beta::rho: return "rho";
        case Beta::color_rho: return "c_rho";
        case Beta::rho_sq: return "rho2";
        case Beta::inv_mu: return "inv_mu";
        case Beta::r_rho_over_mu: return "R_rho_over_mu";
        case Beta::cv_rho: return "cv_rho";
        case Beta::inv_kappa: return "inv_kappa";
    }
    return "?";
}

double beta_eval(Beta b, const MaterialTable& t, double c, double rho) {
    switch (b) {
        case Beta::one: return 1.0;
        case Beta::color: return c;
        case Beta::rho: return rho;
        case Beta::color_rho: return c * rho;
        case Beta::rho_sq: return rho * rho;
        case Beta::inv_mu: return 1.0 / mix(t, Coeff::mu, c);
        case Beta::r_rho_over_mu:
            return mix(t, Coeff::R, c) * rho / mix(t, Coeff::mu, c);
        case Beta::cv_rho: return mix(t, Coeff::cv, c) * rho;
        case Beta::inv_kappa: return 1.0 / mix(t, Coeff::kappa, c);
    }
    return 0.0;
}

std::vector<double> moments(const TwoDiracMeasure& m, Beta b, const MaterialTable& t) {
    const int n = m.n();
    std::vector<double> out(n);
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        out[i] = m.alpha_plus[i] * beta_eval(b, t, 1.0, m.rho_plus[i]) +
                 (1.0 - m.alpha_plus[i]) * beta_eval(b, t, 0.0, m.rho_minus[i]);
    }
    return out;
}

std::vector<double> empirical_moments(const MesoLagState& s, Beta b, const MaterialTable& t,
                                      int samples, double window) {
    const int n = s.n();
    std::vector<double> g(n);
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) g[i] = beta_eval(b, t, s.c[i], 1.0 / s.v[i]);
    const auto uniform = resample_cell_average(cell_partition(s), g, samples);
    return coarse_grain(uniform, window);
}

std::vector<TwoDiracMeasure> evolve_measure(const TwoDiracMeasure& initial,
                                            const LagrangianFieldSeries& fields,
                                            const MaterialTable& t) {
    const int n = initial.n();
    const std::size_t steps = fields.dt.size();
    if (fields.u.size() != steps || fields.sigma.size() != steps || fields.theta.size() != steps)
        throw std::invalid_argument("evolve_measure: misaligned field series");
    if (fields.grid.n() != n || static_cast<int>(fields.v0.size()) != n)
        throw std::invalid_argument("evolve_measure: grid/measure size mismatch");

    // Per-cell phase masses: first integrals of the characteristic
    // system; the densities are recovered from them at every step.
    std::vector<double> P_plus(n), P_minus(n);
    for (int i = 0; i < n; ++i) {
        P_plus[i] = initial.alpha_plus[i] * initial.rho_plus[i] * fields.v0[i];
        P_minus[i] = (1.0 - initial.alpha_plus[i]) * initial.rho_minus[i] * fields.v0[i];
    }

    std::vector<TwoDiracMeasure> out;
    out.reserve(steps + 1);
    out.push_back(initial);
    std::vector<double> v = fields.v0;
    TwoDiracMeasure cur = initial;
    for (std::size_t k = 0; k < steps; ++k) {
        const double dt = fields.dt[k];
        const auto& u = fields.u[k];
        const auto& sg = fields.sigma[k];
        const auto& th = fields.theta[k];
#pragma omp parallel for if (n >= kernels::parallel_grain)
        for (int i = 0; i < n; ++i) {
            const double dmu = (u[i] - u[(i + n - 1) % n]) / fields.grid.cell_mass[i];
            const double v_new = v[i] + dt * dmu;
            const double dxu = dmu / v_new;
            const double a_new =
                advance_alpha(cur.alpha_plus[i], P_plus[i], v_new, sg[i], dxu, th[i], dt, t);
            cur.alpha_plus[i] = a_new;
            cur.rho_plus[i] = a_new < 1e-12 ? 0.0 : P_plus[i] / (v_new * a_new);
            const double am = 1.0 - a_new;
            cur.rho_minus[i] = am < 1e-12 ? 0.0 : P_minus[i] / (v_new * am);
            v[i] = v_new;
        }
        for (int i = 0; i < n; ++i) {
            if (!(cur.alpha_plus[i] >= -1e-8 && cur.alpha_plus[i] <= 1.0 + 1e-8)) {
                std::ostringstream os;
                os << "evolve_measure: weight escaped [0,1] at cell " << i << ", step " << k
                   << " (alpha=" << cur.alpha_plus[i] << ")";
                throw SolverError(os.str());
            }
        }
        out.push_back(cur);
    }
    return out;
}

MomentError moment_compare(Beta b, std::span<const double> candidate,
                           std::span<const double> empirical) {
    if (candidate.size() != empirical.size() || candidate.empty())
        throw std::invalid_argument("moment_compare: frame mismatch");
    MomentError e;
    e.beta = b;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        const double d = std::abs(candidate[i] - empirical[i]);
        e.l1 += d;
        e.linf = std::max(e.linf, d);
    }
    e.l1 /= static_cast<double>(candidate.size());
    return e;
}

} // namespace nsmix
