#pragma once

#include <functional>
#include <vector>

#include "nsmix/material.hpp"
#include "nsmix/state.hpp"

namespace nsmix {

/// Pointwise initial data on the torus.
struct InitialData {
    std::function<double(double)> c0;
    std::function<double(double)> rho0;
    std::function<double(double)> u0;
    std::function<double(double)> theta0;
};

struct MesoConfig {
    double final_time = 0.5;
    double cfl_factor = 0.9;
    double dt_max = 1e-3;
    std::vector<double> snapshot_times; // sorted, within [0, final_time]
    double linear_tol = 1e-12;
    bool record_fields = false; // keep the per-step Lagrangian field series

    void validate() const;
};

/// Builds the Lagrangian state by midpoint sampling of the initial
/// data on n uniform cells, then removes the mean mass velocity so the
/// discrete momentum vanishes exactly. The removed constant is
/// returned and stored in the trajectory.
struct MesoInit {
    MesoLagState state;
    double galilean_shift = 0.0;
};
MesoInit init_lagrangian(const InitialData& data, int n_cells);

/// Largest stable step: acoustic CFL on the smallest cell, the
/// temperature-positivity limiter under compression, and the dt_max cap.
double stable_dt(const MesoLagState& s, const MesoConfig& cfg, const MaterialTable& t);

/// One semi-implicit Lagrangian step: implicit viscous momentum solve,
/// geometry update with the end-of-step velocity, then the linear
/// implicit temperature solve (conduction and pressure work implicit,
/// viscous heating explicit). The color is untouched. Throws
/// SolverError when positivity or the linear tolerance fails, in which
/// case the caller retries with a smaller dt.
MesoLagState meso_step(const MesoLagState& s, double dt, const MaterialTable& t, double tol);

struct MesoRunResult {
    MesoTrajectory trajectory;
    LagrangianFieldSeries fields; // populated when cfg.record_fields
};

MesoRunResult run_meso(const MesoInit& init, const MesoConfig& cfg, const MaterialTable& t);

} // namespace nsmix
