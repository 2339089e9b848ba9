#pragma once

#include <cstddef>
#include <vector>

#include "nsmix/material.hpp"

namespace nsmix {

/// Fixed Lagrangian partition of the unit torus: per-cell masses that
/// never change once built. Node j sits between cell j and cell j+1
/// (mod n); node masses are the arithmetic means of the neighbours.
struct PeriodicMassGrid {
    std::vector<double> cell_mass;
    double total_mass = 0.0;

    int n() const { return static_cast<int>(cell_mass.size()); }
    double node_mass(int j) const {
        const int nn = n();
        return 0.5 * (cell_mass[j] + cell_mass[(j + 1) % nn]);
    }
};

/// Lagrangian staggered state of the mesoscopic mixture. Scalars live
/// on cells, the velocity on nodes; node_x[j] is the (unwrapped)
/// position of the node between cell j and cell j+1.
struct MesoLagState {
    PeriodicMassGrid grid;
    std::vector<double> c;      // color per cell, constant in time
    std::vector<double> v;      // specific volume per cell
    std::vector<double> theta;  // temperature per cell
    std::vector<double> u;      // velocity per node
    std::vector<double> node_x; // node positions
    double time = 0.0;

    int n() const { return grid.n(); }
    /// Mass-coordinate velocity difference over cell i.
    double dm_u(int i) const {
        const int nn = n();
        return (u[i] - u[(i + nn - 1) % nn]) / grid.cell_mass[i];
    }
    /// Node-to-cell averaged velocity.
    double u_cell(int i) const {
        const int nn = n();
        return 0.5 * (u[(i + nn - 1) % nn] + u[i]);
    }
    double cell_width(int i) const { return grid.cell_mass[i] * v[i]; }
};

/// Per-cell quantities derived from a mesoscopic state.
struct DerivedFields {
    std::vector<double> p;         // R(c) rho theta
    std::vector<double> sigma;     // mu(c) dx(u) - p
    std::vector<double> e;         // cv(c) theta
    std::vector<double> E_total;   // u_cell^2/2 + e
    std::vector<double> s;         // entropy
    std::vector<double> heat_flux; // kappa-weighted dx(theta), per node
};

struct Snapshot {
    double time = 0.0;
    MesoLagState state;
    DerivedFields derived;
};

/// Time integration output: snapshots at the requested times plus the
/// accepted step sizes and the constant velocity removed at init.
struct MesoTrajectory {
    std::vector<Snapshot> snapshots;
    std::vector<double> dt_history;
    double galilean_shift = 0.0;
};

/// Lagrangian state of the homogenized (Baer-Nunziato type) system.
/// Y_plus is the phase mass fraction, a Lagrangian invariant; phase
/// densities are always recovered as Y_pm / (v * alpha_pm).
struct MacroLagState {
    PeriodicMassGrid grid;
    std::vector<double> alpha_plus; // volume fraction per cell
    std::vector<double> Y_plus;     // phase mass fraction, constant in time
    std::vector<double> v;
    std::vector<double> theta;
    std::vector<double> u;
    std::vector<double> node_x;
    double time = 0.0;

    int n() const { return grid.n(); }
    double dm_u(int i) const {
        const int nn = n();
        return (u[i] - u[(i + nn - 1) % nn]) / grid.cell_mass[i];
    }
    double u_cell(int i) const {
        const int nn = n();
        return 0.5 * (u[(i + nn - 1) % nn] + u[i]);
    }
    double cell_width(int i) const { return grid.cell_mass[i] * v[i]; }

    /// Phase density with the vanished-phase sentinel: a phase whose
    /// volume fraction is below 1e-12 reports density 0 so that
    /// effective quantities stay finite through its alpha-weight.
    double rho_plus(int i) const {
        return alpha_plus[i] < 1e-12 ? 0.0 : Y_plus[i] / (v[i] * alpha_plus[i]);
    }
    double rho_minus(int i) const {
        const double am = 1.0 - alpha_plus[i];
        return am < 1e-12 ? 0.0 : (1.0 - Y_plus[i]) / (v[i] * am);
    }
};

/// Per-cell derived fields of the macroscopic state.
struct MacroDerived {
    std::vector<double> rho_plus;
    std::vector<double> rho_minus;
    std::vector<double> p_eff;
    std::vector<double> sigma; // mu_eff dx(u) - p_eff
    std::vector<double> mu_eff;
    std::vector<double> kappa_eff;
    std::vector<double> cv_eff;
    std::vector<double> heat_flux; // kappa_eff-weighted dx(theta), per node
};

struct MacroSnapshot {
    double time = 0.0;
    MacroLagState state;
    MacroDerived derived;
};

struct MacroTrajectory {
    std::vector<MacroSnapshot> snapshots;
    std::vector<double> dt_history;
    double galilean_shift = 0.0;
};

/// Per-step Lagrangian field record used to drive the candidate
/// Young-measure characteristic ODEs offline: end-of-step velocity,
/// stress, temperature and specific volume for every accepted step.
struct LagrangianFieldSeries {
    PeriodicMassGrid grid;
    std::vector<double> v0;              // specific volume at t = 0
    std::vector<double> dt;              // accepted steps
    std::vector<std::vector<double>> u;  // node velocity after each step
    std::vector<std::vector<double>> sigma;
    std::vector<std::vector<double>> theta;
};

} // namespace nsmix
