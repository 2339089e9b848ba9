#include "nsmix/macro_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nsmix/detail/time_loop.hpp"
#include "nsmix/effective.hpp"
#include "nsmix/errors.hpp"
#include "nsmix/kernels.hpp"
#include "nsmix/tridiag.hpp"

namespace nsmix {
namespace {

inline double rho_from(double Y, double v, double alpha) {
    return alpha < 1e-12 ? 0.0 : Y / (v * alpha);
}

} // namespace

MacroInit init_macro(const MacroInitialData& data, int n_cells) {
    if (n_cells < 3)
        throw std::invalid_argument("init_macro: need at least 3 cells");
    const int n = n_cells;
    const double dx = 1.0 / n;

    MacroLagState s;
    s.grid.cell_mass.resize(n);
    s.alpha_plus.resize(n);
    s.Y_plus.resize(n);
    s.v.resize(n);
    s.theta.resize(n);
    s.u.resize(n);
    s.node_x.resize(n);
    s.time = 0.0;

    for (int i = 0; i < n; ++i) {
        const double xm = (i + 0.5) * dx;
        const double a0 = data.alpha0(xm);
        const double rp = data.rho0_plus(xm);
        const double rm = data.rho0_minus(xm);
        const double th = data.theta0(xm);
        if (!(a0 >= 0.0 && a0 <= 1.0))
            throw std::invalid_argument("init_macro: alpha0 outside [0,1]");
        if (!(rp > 0.0) || !(rm > 0.0))
            throw std::invalid_argument("init_macro: rho0_pm must be positive");
        if (!(th > 0.0))
            throw std::invalid_argument("init_macro: theta0 must be positive");
        const double rho = a0 * rp + (1.0 - a0) * rm;
        s.grid.cell_mass[i] = rho * dx;
        s.alpha_plus[i] = a0;
        s.Y_plus[i] = a0 * rp / rho;
        s.v[i] = 1.0 / rho;
        s.theta[i] = th;
        s.node_x[i] = (i + 1) * dx;
        s.u[i] = data.u0((i + 1) * dx);
    }
    double total = 0.0;
    for (const double m : s.grid.cell_mass) total += m;
    s.grid.total_mass = total;

    double mom = 0.0;
    for (int j = 0; j < n; ++j) mom += s.grid.node_mass(j) * s.u[j];
    const double shift = -mom / total;
    for (double& uj : s.u) uj += shift;

    return MacroInit{std::move(s), shift};
}

double advance_alpha(double alpha, double Y_plus, double v_new, double sigma, double dxu,
                     double theta, double dt, const MaterialTable& t) {
    const double k1 =
        alpha_rhs(alpha, rho_from(Y_plus, v_new, alpha), theta, sigma, dxu, t);
    const double a_half = alpha + 0.5 * dt * k1;
    const double k2 =
        alpha_rhs(a_half, rho_from(Y_plus, v_new, a_half), theta, sigma, dxu, t);
    return alpha + dt * k2;
}

double macro_stable_dt(const MacroLagState& s, const MesoConfig& cfg, const MaterialTable& t) {
    const int n = s.n();
    double dt = cfg.dt_max;
#pragma omp parallel for reduction(min : dt) if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        const double Y = s.Y_plus[i];
        const double R = Y * t.R_plus + (1.0 - Y) * t.R_minus;
        const double gamma = Y * t.gamma_plus + (1.0 - Y) * t.gamma_minus;
        const double cv = Y * t.cv_plus + (1.0 - Y) * t.cv_minus;
        const double sound = std::sqrt(gamma * R * s.theta[i]);
        const double u_loc = std::max(std::abs(s.u[(i + n - 1) % n]), std::abs(s.u[i]));
        const double acoustic =
            cfg.cfl_factor * (s.grid.cell_mass[i] * s.v[i]) / (u_loc + sound);
        const double compression = std::max(0.0, -s.dm_u(i));
        const double positivity = 0.5 * cv * s.v[i] / (R * compression * s.v[i] + 1e-300);
        dt = std::min(dt, std::min(acoustic, positivity));
    }
    return dt;
}

MacroLagState macro_step(const MacroLagState& s, double dt, const MaterialTable& t, double tol,
                         std::vector<double>* sigma_end_out) {
    const int n = s.n();
    if (!(dt > 0.0))
        throw std::invalid_argument("macro_step: dt must be positive");
    if (sigma_end_out) sigma_end_out->resize(n);
    const auto& m = s.grid.cell_mass;

    // (1) Implicit viscous momentum solve with effective coefficients.
    std::vector<double> W(n), p(n), mu_eff(n), cv_eff(n);
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        const auto eff =
            effective(t, s.alpha_plus[i], s.rho_plus(i), s.rho_minus(i), s.theta[i]);
        mu_eff[i] = eff.mu_eff;
        cv_eff[i] = t.cv_plus * s.Y_plus[i] + t.cv_minus * (1.0 - s.Y_plus[i]);
        W[i] = eff.mu_eff / (m[i] * s.v[i]);
        p[i] = eff.p_eff;
    }
    std::vector<double> lo(n), di(n), up(n), rhs(n);
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int j = 0; j < n; ++j) {
        const int jp = (j + 1) % n;
        const double mn = s.grid.node_mass(j);
        lo[j] = -dt * W[j] / mn;
        up[j] = -dt * W[jp] / mn;
        di[j] = 1.0 + dt * (W[j] + W[jp]) / mn;
        rhs[j] = s.u[j] - dt * (p[jp] - p[j]) / mn;
    }
    MacroLagState out = s;
    out.u = cyclic_tridiag_solve(lo, di, up, rhs, tol);
    out.time = s.time + dt;

    // (2) Geometry update.
    std::vector<double> dmu(n);
    bool positive = true;
#pragma omp parallel for reduction(&& : positive) if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        dmu[i] = (out.u[i] - out.u[(i + n - 1) % n]) / m[i];
        out.v[i] = s.v[i] + dt * dmu[i];
        positive = positive && out.v[i] > 0.0;
    }
    if (!positive)
        throw SolverError("macro_step: specific volume lost positivity (dt too large)");
    for (int j = 0; j < n; ++j) out.node_x[j] = s.node_x[j] + dt * out.u[j];

    // (3) Temperature solve. The pressure-work coefficient p_eff/theta
    // and the interface conductivity use the updated specific volume
    // with the fractions not yet relaxed (phase densities recomputed
    // from the mass fractions at the new volume).
    std::vector<double> kappa_eff(n), Pi(n);
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        const double a = s.alpha_plus[i];
        const auto eff = effective(t, a, rho_from(s.Y_plus[i], out.v[i], a),
                                   rho_from(1.0 - s.Y_plus[i], out.v[i], 1.0 - a), 1.0);
        kappa_eff[i] = eff.kappa_eff;
        Pi[i] = eff.p_eff; // p_eff at unit theta
    }
    std::vector<double> K(n);
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int j = 0; j < n; ++j) {
        const int jp = (j + 1) % n;
        const double a = kappa_eff[j] / out.v[j];
        const double b = kappa_eff[jp] / out.v[jp];
        K[j] = 2.0 * a * b / (a + b);
    }
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        const int im = (i + n - 1) % n;
        const double cond_r = K[i] / s.grid.node_mass(i);
        const double cond_l = K[im] / s.grid.node_mass(im);
        lo[i] = -dt * cond_l / m[i];
        up[i] = -dt * cond_r / m[i];
        di[i] = cv_eff[i] + dt * Pi[i] * dmu[i] + dt * (cond_l + cond_r) / m[i];
        rhs[i] = cv_eff[i] * s.theta[i] + dt * mu_eff[i] * dmu[i] * dmu[i] / out.v[i];
    }
    out.theta = cyclic_tridiag_solve(lo, di, up, rhs, tol);
    for (int i = 0; i < n; ++i)
        if (!(out.theta[i] > 0.0))
            throw SolverError("macro_step: temperature lost positivity (dt too large)");

    // (4) Volume-fraction relaxation with the end-of-step stress.
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        const double a = s.alpha_plus[i];
        const double sigma_end = mu_eff[i] * dmu[i] / out.v[i] - Pi[i] * out.theta[i];
        const double dxu_end = dmu[i] / out.v[i];
        if (sigma_end_out) (*sigma_end_out)[i] = sigma_end;
        out.alpha_plus[i] =
            advance_alpha(a, s.Y_plus[i], out.v[i], sigma_end, dxu_end, out.theta[i], dt, t);
    }
    for (int i = 0; i < n; ++i) {
        if (!(out.alpha_plus[i] >= -1e-8 && out.alpha_plus[i] <= 1.0 + 1e-8)) {
            std::ostringstream os;
            os << "macro_step: alpha_plus escaped [0,1] at cell " << i << " (alpha="
               << out.alpha_plus[i] << ", t=" << out.time << ")";
            throw SolverError(os.str());
        }
    }
    return out;
}

MacroRunResult run_macro(const MacroInit& init, const MesoConfig& cfg, const MaterialTable& t) {
    cfg.validate();
    MacroRunResult res;
    res.trajectory.galilean_shift = init.galilean_shift;
    if (cfg.record_fields) {
        res.fields.grid = init.state.grid;
        res.fields.v0 = init.state.v;
    }

    MacroLagState state = init.state;
    auto record = [&](const MacroLagState& st) {
        MacroSnapshot snap;
        snap.time = st.time;
        snap.state = st;
        kernels::macro_derived_fields(st, t, snap.derived);
        res.trajectory.snapshots.push_back(std::move(snap));
    };
    std::vector<double> sigma_end;
    auto step = [&](const MacroLagState& st, double dt) {
        MacroLagState next =
            macro_step(st, dt, t, cfg.linear_tol, cfg.record_fields ? &sigma_end : nullptr);
        if (cfg.record_fields) {
            res.fields.dt.push_back(dt);
            res.fields.u.push_back(next.u);
            res.fields.sigma.push_back(sigma_end);
            res.fields.theta.push_back(next.theta);
        }
        return next;
    };
    auto next_dt = [&](const MacroLagState& st) { return macro_stable_dt(st, cfg, t); };
    detail::time_loop(state, cfg, step, next_dt, record, res.trajectory.dt_history);
    return res;
}

} // namespace nsmix
