#pragma once

#include <span>
#include <string>
#include <vector>

#include "nsmix/material.hpp"
#include "nsmix/state.hpp"

namespace nsmix {

/// Two-Dirac candidate measure per Lagrangian cell:
/// nu = alpha_plus delta_(1, rho_plus) + (1 - alpha_plus) delta_(0, rho_minus).
/// The weights sum to one structurally.
struct TwoDiracMeasure {
    std::vector<double> alpha_plus;
    std::vector<double> rho_plus;
    std::vector<double> rho_minus;

    int n() const { return static_cast<int>(alpha_plus.size()); }
    static TwoDiracMeasure from_state(const MacroLagState& s);
};

/// Test functions over the (c, rho) box used for the moment checks.
enum class Beta {
    one,
    color,
    rho,
    color_rho,
    rho_sq,
    inv_mu,
    r_rho_over_mu,
    cv_rho,
    inv_kappa,
};

std::vector<Beta> default_moment_family();
std::string beta_name(Beta b);
double beta_eval(Beta b, const MaterialTable& t, double c, double rho);

/// Exact convex combination <nu, beta> per cell.
std::vector<double> moments(const TwoDiracMeasure& m, Beta b, const MaterialTable& t);

/// Weak-* proxy of <nu^eps, beta>: beta evaluated per Lagrangian cell,
/// projected onto the uniform grid, then averaged over the window.
std::vector<double> empirical_moments(const MesoLagState& s, Beta b, const MaterialTable& t,
                                      int samples, double window);

/// Integrates the characteristic system of the kinetic equation per
/// cell through the recorded fields: explicit midpoint for the weight,
/// phase densities recovered from the per-cell phase-mass invariants.
/// Returns the measure after every step (entry 0 is the initial one).
std::vector<TwoDiracMeasure> evolve_measure(const TwoDiracMeasure& initial,
                                            const LagrangianFieldSeries& fields,
                                            const MaterialTable& t);

struct MomentError {
    Beta beta;
    double l1 = 0.0;   // mean absolute error over the grid
    double linf = 0.0; // max absolute error
};

/// Pointwise error table between two uniform-grid moment fields.
MomentError moment_compare(Beta b, std::span<const double> candidate,
                           std::span<const double> empirical);

} // namespace nsmix
