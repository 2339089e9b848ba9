#include "nsmix/meso_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nsmix/detail/time_loop.hpp"
#include "nsmix/errors.hpp"
#include "nsmix/kernels.hpp"
#include "nsmix/tridiag.hpp"

namespace nsmix {

void MesoConfig::validate() const {
    if (!(final_time >= 0.0))
        throw std::invalid_argument("MesoConfig: final_time must be nonnegative");
    if (!(cfl_factor > 0.0 && cfl_factor <= 1.0))
        throw std::invalid_argument("MesoConfig: cfl_factor outside (0,1]");
    if (!(dt_max > 0.0))
        throw std::invalid_argument("MesoConfig: dt_max must be positive");
    if (!(linear_tol > 0.0))
        throw std::invalid_argument("MesoConfig: linear_tol must be positive");
    double prev = -1.0;
    for (const double ts : snapshot_times) {
        if (ts < 0.0 || ts > final_time || ts <= prev)
            throw std::invalid_argument("MesoConfig: snapshot_times must be sorted within [0, final_time]");
        prev = ts;
    }
}

MesoInit init_lagrangian(const InitialData& data, int n_cells) {
    if (n_cells < 3)
        throw std::invalid_argument("init_lagrangian: need at least 3 cells");
    const int n = n_cells;
    const double dx = 1.0 / n;

    MesoLagState s;
    s.grid.cell_mass.resize(n);
    s.c.resize(n);
    s.v.resize(n);
    s.theta.resize(n);
    s.u.resize(n);
    s.node_x.resize(n);
    s.time = 0.0;

    for (int i = 0; i < n; ++i) {
        const double xm = (i + 0.5) * dx;
        const double rho = data.rho0(xm);
        const double th = data.theta0(xm);
        const double col = data.c0(xm);
        if (!(rho > 0.0) || !std::isfinite(rho))
            throw std::invalid_argument("init_lagrangian: rho0 must be positive");
        if (!(th > 0.0) || !std::isfinite(th))
            throw std::invalid_argument("init_lagrangian: theta0 must be positive");
        if (!(col >= 0.0 && col <= 1.0))
            throw std::invalid_argument("init_lagrangian: c0 outside [0,1]");
        s.grid.cell_mass[i] = rho * dx;
        s.v[i] = 1.0 / rho;
        s.theta[i] = th;
        s.c[i] = col;
        s.node_x[i] = (i + 1) * dx; // node i closes cell i on the right
        s.u[i] = data.u0((i + 1) * dx);
    }
    double total = 0.0;
    for (const double m : s.grid.cell_mass) total += m;
    s.grid.total_mass = total;

    // Galilean normalization: remove the mean mass velocity so that
    // sum_j mn_j u_j = 0 holds from the start.
    double mom = 0.0;
    for (int j = 0; j < n; ++j) mom += s.grid.node_mass(j) * s.u[j];
    const double shift = -mom / total;
    for (double& uj : s.u) uj += shift;

    return MesoInit{std::move(s), shift};
}

double stable_dt(const MesoLagState& s, const MesoConfig& cfg, const MaterialTable& t) {
    const int n = s.n();
    double dt = cfg.dt_max;
#pragma omp parallel for reduction(min : dt) if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        const double R = mix(t, Coeff::R, s.c[i]);
        const double gamma = mix(t, Coeff::gamma, s.c[i]);
        const double cv = mix(t, Coeff::cv, s.c[i]);
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

MesoLagState meso_step(const MesoLagState& s, double dt, const MaterialTable& t, double tol) {
    const int n = s.n();
    if (!(dt > 0.0))
        throw std::invalid_argument("meso_step: dt must be positive");
    const auto& m = s.grid.cell_mass;

    // (1) Implicit viscous momentum solve, explicit pressure gradient:
    //   u* - dt d_m(mu(c) d_m u* / v) = u^n - dt d_m p^n.
    std::vector<double> W(n), p(n);
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        W[i] = mix(t, Coeff::mu, s.c[i]) / (m[i] * s.v[i]);
        p[i] = mix(t, Coeff::R, s.c[i]) * s.theta[i] / s.v[i];
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
    MesoLagState out = s;
    out.u = cyclic_tridiag_solve(lo, di, up, rhs, tol);
    out.time = s.time + dt;

    // (2) Geometry update with the end-of-step velocity.
    std::vector<double> dmu(n);
    bool positive = true;
#pragma omp parallel for reduction(&& : positive) if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        dmu[i] = (out.u[i] - out.u[(i + n - 1) % n]) / m[i];
        out.v[i] = s.v[i] + dt * dmu[i];
        positive = positive && out.v[i] > 0.0;
    }
    if (!positive)
        throw SolverError("meso_step: specific volume lost positivity (dt too large)");
    for (int j = 0; j < n; ++j) out.node_x[j] = s.node_x[j] + dt * out.u[j];

    // (3) Linear implicit temperature solve. Interface conductivity is
    // the harmonic mean of kappa(c)/v on both sides; pressure work is
    // implicit in theta, viscous heating explicit (nonnegative).
    std::vector<double> K(n);
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int j = 0; j < n; ++j) {
        const int jp = (j + 1) % n;
        const double a = mix(t, Coeff::kappa, s.c[j]) / out.v[j];
        const double b = mix(t, Coeff::kappa, s.c[jp]) / out.v[jp];
        K[j] = 2.0 * a * b / (a + b);
    }
#pragma omp parallel for if (n >= kernels::parallel_grain)
    for (int i = 0; i < n; ++i) {
        const int im = (i + n - 1) % n;
        const double cv = mix(t, Coeff::cv, s.c[i]);
        const double R = mix(t, Coeff::R, s.c[i]);
        const double mu = mix(t, Coeff::mu, s.c[i]);
        const double cond_r = K[i] / s.grid.node_mass(i);
        const double cond_l = K[im] / s.grid.node_mass(im);
        lo[i] = -dt * cond_l / m[i];
        up[i] = -dt * cond_r / m[i];
        di[i] = cv + dt * R * dmu[i] / out.v[i] + dt * (cond_l + cond_r) / m[i];
        rhs[i] = cv * s.theta[i] + dt * mu * dmu[i] * dmu[i] / out.v[i];
    }
    out.theta = cyclic_tridiag_solve(lo, di, up, rhs, tol);
    for (int i = 0; i < n; ++i)
        if (!(out.theta[i] > 0.0))
            throw SolverError("meso_step: temperature lost positivity (dt too large)");
    return out;
}

MesoRunResult run_meso(const MesoInit& init, const MesoConfig& cfg, const MaterialTable& t) {
    cfg.validate();
    MesoRunResult res;
    res.trajectory.galilean_shift = init.galilean_shift;
    if (cfg.record_fields) {
        res.fields.grid = init.state.grid;
        res.fields.v0 = init.state.v;
    }

    MesoLagState state = init.state;
    auto record = [&](const MesoLagState& st) {
        Snapshot snap;
        snap.time = st.time;
        snap.state = st;
        kernels::derived_fields(st, t, snap.derived);
        res.trajectory.snapshots.push_back(std::move(snap));
    };
    auto step = [&](const MesoLagState& st, double dt) {
        MesoLagState next = meso_step(st, dt, t, cfg.linear_tol);
        if (cfg.record_fields) {
            DerivedFields d;
            kernels::derived_fields(next, t, d);
            res.fields.dt.push_back(dt);
            res.fields.u.push_back(next.u);
            res.fields.sigma.push_back(d.sigma);
            res.fields.theta.push_back(next.theta);
        }
        return next;
    };
    auto next_dt = [&](const MesoLagState& st) { return stable_dt(st, cfg, t); };
    detail::time_loop(state, cfg, step, next_dt, record, res.trajectory.dt_history);
    return res;
}

} // namespace nsmix
