#pragma once

#include <span>
#include <vector>

namespace nsmix {

/// Mean-zero periodic antiderivative of a field sampled at the centers
/// (s + 1/2)/n of a uniform partition of the torus. The field is read
/// as piecewise constant, so the cumulative integral is the exact
/// midpoint quadrature; the constant is fixed by removing the mean of
/// the resulting piecewise-linear function.
std::vector<double> antiderivative_periodic(std::span<const double> f);

/// Converts a window length in (0, 1] into a whole number of samples,
/// rejecting windows that are not an integer multiple of the step.
int window_to_samples(double window, int n_samples);

/// Periodic top-hat moving average with the window given as a length.
std::vector<double> coarse_grain(std::span<const double> f, double window);

} // namespace nsmix
