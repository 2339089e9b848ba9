#include "nsmix/resample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsmix/kernels.hpp"

namespace nsmix {
namespace {

double wrap01(double x) { return x - std::floor(x); }

template <class State>
CellPartition partition_of(const State& s) {
    const int n = s.n();
    CellPartition part;
    part.edge.resize(n + 1);
    part.edge[0] = wrap01(s.node_x[n - 1]); // left edge of cell 0
    for (int i = 0; i < n; ++i) part.edge[i + 1] = part.edge[i] + s.cell_width(i);
    // Cell widths sum to the torus length; pin the wrap edge exactly.
    part.edge[n] = part.edge[0] + 1.0;
    return part;
}

// Index of the cell containing x, with x already shifted into [edge[0], edge[n]).
int locate(const CellPartition& part, double x) {
    const auto it = std::upper_bound(part.edge.begin(), part.edge.end(), x);
    int i = static_cast<int>(it - part.edge.begin()) - 1;
    return std::clamp(i, 0, part.n() - 1);
}

// Integral of the piecewise-constant field over the in-frame span [x1, x2),
// with edge[0] <= x1 <= x2 <= edge[n].
double span_integral(const CellPartition& part, std::span<const double> f, double x1, double x2) {
    double acc = 0.0;
    int i = locate(part, x1);
    double x = x1;
    while (x < x2) {
        const double hi = std::min(part.edge[i + 1], x2);
        acc += f[i] * (hi - x);
        x = hi;
        ++i;
    }
    return acc;
}

// Integral of the periodic field over [a, b) with 0 < b - a < 1.
double interval_integral(const CellPartition& part, std::span<const double> f, double a, double b) {
    const double e0 = part.edge.front();
    const double shift = std::floor(a - e0);
    a -= shift;
    b -= shift;
    const double seam = e0 + 1.0;
    double acc = span_integral(part, f, a, std::min(b, seam));
    if (b > seam)
        acc += span_integral(part, f, e0, b - 1.0);
    return acc;
}

} // namespace

CellPartition cell_partition(const MesoLagState& s) { return partition_of(s); }
CellPartition cell_partition(const MacroLagState& s) { return partition_of(s); }

std::vector<double> resample_cell_average(const CellPartition& part,
                                          std::span<const double> cell_values, int samples) {
    if (samples < part.n())
        throw std::invalid_argument("resample: sample count below cell count");
    if (static_cast<int>(cell_values.size()) != part.n())
        throw std::invalid_argument("resample: field size mismatch");
    const double h = 1.0 / samples;
    std::vector<double> out(samples);
#pragma omp parallel for if (samples >= kernels::parallel_grain)
    for (int s = 0; s < samples; ++s)
        out[s] = interval_integral(part, cell_values, s * h, (s + 1) * h) / h;
    return out;
}

std::vector<double> resample_velocity(const CellPartition& part, std::span<const double> u,
                                      int samples) {
    if (samples < part.n())
        throw std::invalid_argument("resample: sample count below cell count");
    const int n = part.n();
    const double h = 1.0 / samples;
    std::vector<double> out(samples);
#pragma omp parallel for if (samples >= kernels::parallel_grain)
    for (int s = 0; s < samples; ++s) {
        double x = (s + 0.5) * h;
        x -= std::floor(x - part.edge.front());
        const int i = locate(part, x);
        const double xl = part.edge[i];
        const double w = part.edge[i + 1] - xl;
        const double ul = u[(i + n - 1) % n];
        const double ur = u[i];
        out[s] = ul + (ur - ul) * ((x - xl) / w);
    }
    return out;
}

std::vector<double> resample_cell_linear(const CellPartition& part,
                                         std::span<const double> cell_values, int samples) {
    if (samples < part.n())
        throw std::invalid_argument("resample: sample count below cell count");
    const int n = part.n();
    const double h = 1.0 / samples;
    std::vector<double> out(samples);
#pragma omp parallel for if (samples >= kernels::parallel_grain)
    for (int s = 0; s < samples; ++s) {
        double x = (s + 0.5) * h;
        x -= std::floor(x - part.edge.front());
        int i = locate(part, x);
        double ci = 0.5 * (part.edge[i] + part.edge[i + 1]);
        // Interpolate between the centers bracketing x.
        int il = i, ir = i;
        double cl = ci, cr = ci;
        if (x < ci) {
            il = (i + n - 1) % n;
            cl = ci - 0.5 * (part.edge[i + 1] - part.edge[i]) -
                 0.5 * (part.edge[il + 1] - part.edge[il]);
        } else {
            ir = (i + 1) % n;
            cr = ci + 0.5 * (part.edge[i + 1] - part.edge[i]) +
                 0.5 * (part.edge[ir + 1] - part.edge[ir]);
        }
        if (ir == il) {
            out[s] = cell_values[i];
        } else {
            const double w = (x - cl) / (cr - cl);
            out[s] = cell_values[il] * (1.0 - w) + cell_values[ir] * w;
        }
    }
    return out;
}

UniformFields resample_meso(const MesoLagState& s, const DerivedFields& d, int samples) {
    const CellPartition part = cell_partition(s);
    UniformFields out;
    out.samples = samples;
    std::vector<double> rho(s.n());
    for (int i = 0; i < s.n(); ++i) rho[i] = 1.0 / s.v[i];
    out.c = resample_cell_average(part, s.c, samples);
    out.rho = resample_cell_average(part, rho, samples);
    out.theta = resample_cell_average(part, s.theta, samples);
    out.sigma = resample_cell_average(part, d.sigma, samples);
    out.p = resample_cell_average(part, d.p, samples);
    out.u = resample_velocity(part, s.u, samples);
    return out;
}

UniformMacroFields resample_macro(const MacroLagState& s, const MacroDerived& d, int samples) {
    const CellPartition part = cell_partition(s);
    UniformMacroFields out;
    out.samples = samples;
    std::vector<double> rho(s.n());
    for (int i = 0; i < s.n(); ++i) rho[i] = 1.0 / s.v[i];
    out.alpha_plus = resample_cell_average(part, s.alpha_plus, samples);
    out.rho = resample_cell_average(part, rho, samples);
    out.rho_plus = resample_cell_average(part, d.rho_plus, samples);
    out.rho_minus = resample_cell_average(part, d.rho_minus, samples);
    out.theta = resample_cell_average(part, s.theta, samples);
    out.sigma = resample_cell_average(part, d.sigma, samples);
    out.u = resample_velocity(part, s.u, samples);
    return out;
}

} // namespace nsmix
