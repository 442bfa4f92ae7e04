#include "curvedspec/types.hpp"

#include <cmath>

namespace curvedspec {

double norm_squared(const SampledWavefunction& f) {
    check_grid(f.grid);
    if (f.values.size() != f.grid.size())
        throw GridError("values and grid must have equal length");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < f.grid.size(); ++i) {
        const double h = f.grid[i + 1] - f.grid[i];
        const double a = f.values[i] * f.values[i] * measure_weight(f.measure, f.grid[i]);
        const double b = f.values[i + 1] * f.values[i + 1] * measure_weight(f.measure, f.grid[i + 1]);
        acc += 0.5 * h * (a + b);
    }
    return acc;
}

void normalize_inplace(SampledWavefunction& f) {
    const double n2 = norm_squared(f);
    if (!(n2 > 0.0)) throw GridError("cannot normalize a zero function");
    double scale = 1.0 / std::sqrt(n2);
    for (double v : f.values) {
        if (v != 0.0) {
            if (v < 0.0) scale = -scale;
            break;
        }
    }
    for (double& v : f.values) v *= scale;
    f.normalized = true;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) throw GridError("uniform_grid: need n >= 2 and hi > lo");
    std::vector<double> g(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + h * static_cast<double>(i);
    g.back() = hi;
    return g;
}

}  // namespace curvedspec
