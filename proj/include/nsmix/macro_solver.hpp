#pragma once

#include <functional>

#include "nsmix/material.hpp"
#include "nsmix/meso_solver.hpp"
#include "nsmix/state.hpp"

namespace nsmix {

/// Pointwise initial data of the homogenized system.
struct MacroInitialData {
    std::function<double(double)> alpha0;
    std::function<double(double)> rho0_plus;
    std::function<double(double)> rho0_minus;
    std::function<double(double)> u0;
    std::function<double(double)> theta0;
};

struct MacroInit {
    MacroLagState state;
    double galilean_shift = 0.0;
};

MacroInit init_macro(const MacroInitialData& data, int n_cells);

/// Right-hand side of the volume-fraction equation for the + phase:
/// the mismatch between the mixture stress and the phase stress,
/// relaxed at rate alpha_plus / mu_plus.
inline double alpha_rhs(double alpha_plus, double rho_plus, double theta, double sigma,
                        double dxu, const MaterialTable& t) {
    return alpha_plus / t.mu_plus * (sigma - (t.mu_plus * dxu - t.R_plus * rho_plus * theta));
}

/// Same for the - phase; the two cancel exactly when sigma follows the
/// effective stress law.
inline double alpha_rhs_minus(double alpha_minus, double rho_minus, double theta, double sigma,
                              double dxu, const MaterialTable& t) {
    return alpha_minus / t.mu_minus * (sigma - (t.mu_minus * dxu - t.R_minus * rho_minus * theta));
}

/// One explicit-midpoint update of the volume fraction over dt with
/// frozen end-of-step fields. Phase densities are recomputed from the
/// mass fractions at every stage, which keeps the phase-mass
/// conservation law exact; the same routine drives the candidate
/// Young-measure characteristics.
double advance_alpha(double alpha, double Y_plus, double v_new, double sigma, double dxu,
                     double theta, double dt, const MaterialTable& t);

double macro_stable_dt(const MacroLagState& s, const MesoConfig& cfg, const MaterialTable& t);

/// Same splitting skeleton as the mesoscopic step with effective
/// coefficients, plus the volume-fraction sub-step. When requested,
/// sigma_end_out receives the per-cell stress the relaxation consumed.
MacroLagState macro_step(const MacroLagState& s, double dt, const MaterialTable& t, double tol,
                         std::vector<double>* sigma_end_out = nullptr);

struct MacroRunResult {
    MacroTrajectory trajectory;
    LagrangianFieldSeries fields; // populated when cfg.record_fields
};

MacroRunResult run_macro(const MacroInit& init, const MesoConfig& cfg, const MaterialTable& t);

} // namespace nsmix
