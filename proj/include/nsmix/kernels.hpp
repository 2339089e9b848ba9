#pragma once

#include <span>
#include <vector>

#include "nsmix/effective.hpp"
#include "nsmix/material.hpp"
#include "nsmix/state.hpp"

namespace nsmix::kernels {

/// Loops below this length stay serial; the OpenMP dispatch overhead
/// is not worth it for short desk-scale arrays.
inline constexpr int parallel_grain = 4096;

void derived_fields(const MesoLagState& s, const MaterialTable& t, DerivedFields& out);
void macro_derived_fields(const MacroLagState& s, const MaterialTable& t, MacroDerived& out);

/// Periodic top-hat moving average. The window must be an integer
/// number of samples; it covers samples s - floor(r/2) .. s - floor(r/2) + r - 1.
std::vector<double> coarse_grain(std::span<const double> f, int window_samples);

double field_min(std::span<const double> f);
double field_max(std::span<const double> f);

/// Serial reference implementations, kept for testing and benchmarked
/// against the parallel path.
namespace serial {
void derived_fields(const MesoLagState& s, const MaterialTable& t, DerivedFields& out);
void macro_derived_fields(const MacroLagState& s, const MaterialTable& t, MacroDerived& out);
std::vector<double> coarse_grain(std::span<const double> f, int window_samples);
double field_min(std::span<const double> f);
double field_max(std::span<const double> f);
} // namespace serial

} // namespace nsmix::kernels
