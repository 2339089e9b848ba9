#include "nsmix/periodic_ops.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "nsmix/kernels.hpp"

namespace nsmix {

std::vector<double> antiderivative_periodic(std::span<const double> f) {
    const std::size_t n = f.size();
    if (n == 0)
        throw std::invalid_argument("antiderivative_periodic: empty field");
    const double h = 1.0 / static_cast<double>(n);
    std::vector<double> out(n);
    double cum = 0.0; // integral of f from 0 to the left edge of cell s
    for (std::size_t s = 0; s < n; ++s) {
        out[s] = cum + 0.5 * h * f[s];
        cum += h * f[s];
    }
    double mean = 0.0;
    for (const double x : out) mean += x;
    mean *= h;
    for (double& x : out) x -= mean;
    return out;
}

int window_to_samples(double window, int n_samples) {
    if (!(window > 0.0) || window > 1.0)
        throw std::invalid_argument("coarse_grain: window outside (0, 1]");
    const double raw = window * n_samples;
    const int r = static_cast<int>(std::lround(raw));
    if (r < 1 || std::abs(raw - r) > 1e-9 * n_samples)
        throw std::invalid_argument("coarse_grain: window is not a multiple of the sampling step");
    return r;
}

std::vector<double> coarse_grain(std::span<const double> f, double window) {
    return kernels::coarse_grain(f, window_to_samples(window, static_cast<int>(f.size())));
}

} // namespace nsmix
