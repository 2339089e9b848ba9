#pragma once

#include <stdexcept>

#include "nsmix/material.hpp"

namespace nsmix {

/// Coefficients of the homogenized two-phase system at one point:
/// harmonic means in the volume fraction for mu and kappa, the
/// mass-weighted specific heat, and the viscosity-weighted pressure.
struct EffectiveCoefficients {
    double mu_eff;
    double kappa_eff;
    double cv_eff;
    double p_eff;
};

inline EffectiveCoefficients effective(const MaterialTable& t, double alpha_plus,
                                       double rho_plus, double rho_minus, double theta) {
    if (!(alpha_plus >= -1e-12 && alpha_plus <= 1.0 + 1e-12))
        throw std::invalid_argument("effective: alpha_plus outside [0,1]");
    const double ap = alpha_plus < 0.0 ? 0.0 : (alpha_plus > 1.0 ? 1.0 : alpha_plus);
    const double am = 1.0 - ap;

    EffectiveCoefficients out;
    out.mu_eff = 1.0 / (ap / t.mu_plus + am / t.mu_minus);
    out.kappa_eff = 1.0 / (ap / t.kappa_plus + am / t.kappa_minus);
    const double mass_plus = ap * rho_plus;
    const double mass_minus = am * rho_minus;
    const double mass = mass_plus + mass_minus;
    if (mass > 0.0)
        out.cv_eff = (mass_plus * t.cv_plus + mass_minus * t.cv_minus) / mass;
    else
        out.cv_eff = ap * t.cv_plus + am * t.cv_minus;
    out.p_eff = out.mu_eff *
                (ap * t.R_plus * rho_plus / t.mu_plus + am * t.R_minus * rho_minus / t.mu_minus) *
                theta;
    return out;
}

} // namespace nsmix
