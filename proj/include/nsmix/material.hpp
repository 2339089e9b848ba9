#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace nsmix {

enum class Coeff { mu, cv, gamma, R, kappa };

/// Per-phase physical constants of the two ideal gases plus the affine
/// mixing rule f(c) = f_+ c + f_-(1-c). The gas constants R_pm are
/// derived from (cv_pm, gamma_pm) through gamma = R/cv + 1 at
/// construction; they are never accepted independently.
struct MaterialTable {
    double mu_plus = 1.0, mu_minus = 1.0;
    double cv_plus = 1.0, cv_minus = 1.0;
    double gamma_plus = 1.4, gamma_minus = 1.4;
    double kappa_plus = 1.0, kappa_minus = 1.0;
    double R_plus = 0.4, R_minus = 0.4; // cv * (gamma - 1)

    static MaterialTable make(double mu_p, double mu_m,
                              double cv_p, double cv_m,
                              double gamma_p, double gamma_m,
                              double kappa_p, double kappa_m) {
        auto positive = [](double x, const char* name) {
            if (!(x > 0.0) || !std::isfinite(x))
                throw std::invalid_argument(std::string("MaterialTable: ") + name +
                                            " must be positive and finite");
        };
        positive(mu_p, "mu_plus");
        positive(mu_m, "mu_minus");
        positive(cv_p, "cv_plus");
        positive(cv_m, "cv_minus");
        positive(kappa_p, "kappa_plus");
        positive(kappa_m, "kappa_minus");
        if (!(gamma_p > 1.0) || !(gamma_m > 1.0))
            throw std::invalid_argument("MaterialTable: gamma_pm must exceed 1");
        MaterialTable t;
        t.mu_plus = mu_p;
        t.mu_minus = mu_m;
        t.cv_plus = cv_p;
        t.cv_minus = cv_m;
        t.gamma_plus = gamma_p;
        t.gamma_minus = gamma_m;
        t.kappa_plus = kappa_p;
        t.kappa_minus = kappa_m;
        t.R_plus = cv_p * (gamma_p - 1.0);
        t.R_minus = cv_m * (gamma_m - 1.0);
        return t;
    }

    /// Table with + and - phases swapped.
    MaterialTable swapped() const {
        return make(mu_minus, mu_plus, cv_minus, cv_plus,
                    gamma_minus, gamma_plus, kappa_minus, kappa_plus);
    }

    double plus(Coeff f) const {
        switch (f) {
            case Coeff::mu: return mu_plus;
            case Coeff::cv: return cv_plus;
            case Coeff::gamma: return gamma_plus;
            case Coeff::R: return R_plus;
            case Coeff::kappa: return kappa_plus;
        }
        return 0.0;
    }

    double minus(Coeff f) const {
        switch (f) {
            case Coeff::mu: return mu_minus;
            case Coeff::cv: return cv_minus;
            case Coeff::gamma: return gamma_minus;
            case Coeff::R: return R_minus;
            case Coeff::kappa: return kappa_minus;
        }
        return 0.0;
    }

    double max_of(Coeff f) const { return std::max(plus(f), minus(f)); }
    double min_of(Coeff f) const { return std::min(plus(f), minus(f)); }
};

/// Affine mixing rule f(c) = f_+ c + f_-(1-c). Rejects c outside [0,1]
/// beyond a 1e-12 tolerance, then clamps the remainder so the result
/// always lies in [f_min, f_max].
inline double mix(const MaterialTable& t, Coeff f, double c) {
    if (!(c >= -1e-12 && c <= 1.0 + 1e-12))
        throw std::invalid_argument("mix: color outside [0,1]");
    const double cc = c < 0.0 ? 0.0 : (c > 1.0 ? 1.0 : c);
    return t.plus(f) * cc + t.minus(f) * (1.0 - cc);
}

struct EosResult {
    double p; // R(c) rho theta
    double e; // cv(c) theta
    double s; // cv(c) ln(theta) - R(c) ln(rho)
};

/// Ideal-gas equation of state of the mixture at color c.
inline EosResult eos(const MaterialTable& t, double c, double rho, double theta) {
    if (!(rho > 0.0) || !(theta > 0.0))
        throw std::invalid_argument("eos: rho and theta must be positive");
    const double R = mix(t, Coeff::R, c);
    const double cv = mix(t, Coeff::cv, c);
    return EosResult{R * rho * theta, cv * theta, cv * std::log(theta) - R * std::log(rho)};
}

} // namespace nsmix
