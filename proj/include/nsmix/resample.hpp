#pragma once

#include <span>
#include <vector>

#include "nsmix/state.hpp"

namespace nsmix {

/// Physical cell layout of a Lagrangian state on the torus:
/// edge[i]..edge[i+1] bounds cell i, edge[0] lies in [0,1) and
/// edge[n] = edge[0] + 1. Built from cumulative cell widths so the
/// edges are strictly increasing by construction.
struct CellPartition {
    std::vector<double> edge;
    int n() const { return static_cast<int>(edge.size()) - 1; }
};

CellPartition cell_partition(const MesoLagState& s);
CellPartition cell_partition(const MacroLagState& s);

/// Exact piecewise-constant projection: sample s receives the average
/// of the cell field over the uniform interval [s/S, (s+1)/S). Mass
/// integrals are preserved to roundoff.
std::vector<double> resample_cell_average(const CellPartition& part,
                                          std::span<const double> cell_values, int samples);

/// Piecewise-linear node-velocity interpolation evaluated at the
/// uniform sample centers (s + 1/2)/S.
std::vector<double> resample_velocity(const CellPartition& part, std::span<const double> u,
                                      int samples);

/// Second-order resampling for smooth fields: periodic linear
/// interpolation of cell-center values at the sample centers. Used by
/// the grid-convergence studies where the piecewise-constant
/// projection would dominate the measured order.
std::vector<double> resample_cell_linear(const CellPartition& part,
                                         std::span<const double> cell_values, int samples);

/// Uniform-grid snapshot of a mesoscopic state.
struct UniformFields {
    int samples = 0;
    std::vector<double> c, rho, theta, sigma, p, u;
};

UniformFields resample_meso(const MesoLagState& s, const DerivedFields& d, int samples);

/// Uniform-grid snapshot of a macroscopic state.
struct UniformMacroFields {
    int samples = 0;
    std::vector<double> alpha_plus, rho, rho_plus, rho_minus, theta, sigma, u;
};

UniformMacroFields resample_macro(const MacroLagState& s, const MacroDerived& d, int samples);

} // namespace nsmix
