#include "nsmix/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nsmix::kernels {
namespace {

inline void meso_cell(const MesoLagState& s, const MaterialTable& t, int i, DerivedFields& out) {
    const double rho = 1.0 / s.v[i];
    const double mu = mix(t, Coeff::mu, s.c[i]);
    const auto gas = eos(t, s.c[i], rho, s.theta[i]);
    const double dxu = s.dm_u(i) / s.v[i];
    out.p[i] = gas.p;
    out.e[i] = gas.e;
    out.s[i] = gas.s;
    out.sigma[i] = mu * dxu - gas.p;
    const double uc = s.u_cell(i);
    out.E_total[i] = 0.5 * uc * uc + gas.e;
}

// Conduction flux through node j: harmonic interface conductivity of
// kappa(c)/v on both sides times the mass-coordinate temperature jump.
inline double meso_node_flux(const MesoLagState& s, const MaterialTable& t, int j) {
    const int n = s.n();
    const int jp = (j + 1) % n;
    const double a = mix(t, Coeff::kappa, s.c[j]) / s.v[j];
    const double b = mix(t, Coeff::kappa, s.c[jp]) / s.v[jp];
    const double K = 2.0 * a * b / (a + b);
    return K * (s.theta[jp] - s.theta[j]) / s.grid.node_mass(j);
}

inline void macro_cell(const MacroLagState& s, const MaterialTable& t, int i, MacroDerived& out) {
    const double rp = s.rho_plus(i);
    const double rm = s.rho_minus(i);
    const auto eff = effective(t, s.alpha_plus[i], rp, rm, s.theta[i]);
    const double dxu = s.dm_u(i) / s.v[i];
    out.rho_plus[i] = rp;
    out.rho_minus[i] = rm;
    out.mu_eff[i] = eff.mu_eff;
    out.kappa_eff[i] = eff.kappa_eff;
    out.cv_eff[i] = t.cv_plus * s.Y_plus[i] + t.cv_minus * (1.0 - s.Y_plus[i]);
    out.p_eff[i] = eff.p_eff;
    out.sigma[i] = eff.mu_eff * dxu - eff.p_eff;
}

inline double macro_node_flux(const MacroLagState& s, const MaterialTable& t,
                              const MacroDerived& d, int j) {
    const int n = s.n();
    const int jp = (j + 1) % n;
    const double a = d.kappa_eff[j] / s.v[j];
    const double b = d.kappa_eff[jp] / s.v[jp];
    const double K = 2.0 * a * b / (a + b);
    return K * (s.theta[jp] - s.theta[j]) / s.grid.node_mass(j);
}

inline double window_mean(std::span<const double> f, int n, int r, int s) {
    int q = s - r / 2;
    q = ((q % n) + n) % n;
    double acc = 0.0;
    for (int k = 0; k < r; ++k) {
        acc += f[q];
        if (++q == n) q = 0;
    }
    return acc / r;
}

void check_window(std::span<const double> f, int r) {
    if (f.empty())
        throw std::invalid_argument("coarse_grain: empty field");
    if (r < 1 || r > static_cast<int>(f.size()))
        throw std::invalid_argument("coarse_grain: window outside (0, 1]");
}

} // namespace

void derived_fields(const MesoLagState& s, const MaterialTable& t, DerivedFields& out) {
    const int n = s.n();
    out.p.resize(n);
    out.sigma.resize(n);
    out.e.resize(n);
    out.E_total.resize(n);
    out.s.resize(n);
    out.heat_flux.resize(n);
#pragma omp parallel for if (n >= parallel_grain)
    for (int i = 0; i < n; ++i) {
        meso_cell(s, t, i, out);
        out.heat_flux[i] = meso_node_flux(s, t, i);
    }
}

void macro_derived_fields(const MacroLagState& s, const MaterialTable& t, MacroDerived& out) {
    const int n = s.n();
    out.rho_plus.resize(n);
    out.rho_minus.resize(n);
    out.p_eff.resize(n);
    out.sigma.resize(n);
    out.mu_eff.resize(n);
    out.kappa_eff.resize(n);
    out.cv_eff.resize(n);
    out.heat_flux.resize(n);
#pragma omp parallel for if (n >= parallel_grain)
    for (int i = 0; i < n; ++i) macro_cell(s, t, i, out);
#pragma omp parallel for if (n >= parallel_grain)
    for (int j = 0; j < n; ++j) out.heat_flux[j] = macro_node_flux(s, t, out, j);
}

std::vector<double> coarse_grain(std::span<const double> f, int window_samples) {
    check_window(f, window_samples);
    const int n = static_cast<int>(f.size());
    std::vector<double> out(n);
#pragma omp parallel for if (n >= parallel_grain)
    for (int s = 0; s < n; ++s) out[s] = window_mean(f, n, window_samples, s);
    return out;
}

double field_min(std::span<const double> f) {
    const int n = static_cast<int>(f.size());
    double m = f[0];
#pragma omp parallel for reduction(min : m) if (n >= parallel_grain)
    for (int i = 0; i < n; ++i) m = std::min(m, f[i]);
    return m;
}

double field_max(std::span<const double> f) {
    const int n = static_cast<int>(f.size());
    double m = f[0];
#pragma omp parallel for reduction(max : m) if (n >= parallel_grain)
    for (int i = 0; i < n; ++i) m = std::max(m, f[i]);
    return m;
}

namespace serial {

void derived_fields(const MesoLagState& s, const MaterialTable& t, DerivedFields& out) {
    const int n = s.n();
    out.p.resize(n);
    out.sigma.resize(n);
    out.e.resize(n);
    out.E_total.resize(n);
    out.s.resize(n);
    out.heat_flux.resize(n);
    for (int i = 0; i < n; ++i) {
        meso_cell(s, t, i, out);
        out.heat_flux[i] = meso_node_flux(s, t, i);
    }
}

void macro_derived_fields(const MacroLagState& s, const MaterialTable& t, MacroDerived& out) {
    const int n = s.n();
    out.rho_plus.resize(n);
    out.rho_minus.resize(n);
    out.p_eff.resize(n);
    out.sigma.resize(n);
    out.mu_eff.resize(n);
    out.kappa_eff.resize(n);
    out.cv_eff.resize(n);
    out.heat_flux.resize(n);
    for (int i = 0; i < n; ++i) macro_cell(s, t, i, out);
    for (int j = 0; j < n; ++j) out.heat_flux[j] = macro_node_flux(s, t, out, j);
}

std::vector<double> coarse_grain(std::span<const double> f, int window_samples) {
    check_window(f, window_samples);
    const int n = static_cast<int>(f.size());
    std::vector<double> out(n);
    for (int s = 0; s < n; ++s) out[s] = window_mean(f, n, window_samples, s);
    return out;
}

double field_min(std::span<const double> f) {
    double m = f[0];
    for (const double x : f) m = std::min(m, x);
    return m;
}

double field_max(std::span<const double> f) {
    double m = f[0];
    for (const double x : f) m = std::max(m, x);
    return m;
}

} // namespace serial
} // namespace nsmix::kernels
