#pragma once

#include <cstddef>
#include <vector>

#include "curvedspec/types.hpp"

namespace curvedspec::fd {

// Grid spacing of a uniform grid; throws GridError if the spacing varies.
inline double uniform_spacing(const std::vector<double>& grid) {
    check_grid(grid, 2);
    const double h = grid[1] - grid[0];
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (std::abs((grid[i + 1] - grid[i]) - h) > 1e-9 * h)
            throw GridError("grid must be uniform for finite differences");
    return h;
}

// 5-point first derivative, one-sided at the ends.
inline std::vector<double> derivative(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    if (n < 5) throw GridError("derivative: need at least 5 points");
    std::vector<double> d(n);
    const double c = 1.0 / (12.0 * h);
    d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
    d[n - 2] = c * (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]);
    d[n - 1] = c * (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]);
    return d;
}

// 5-point central second derivative; valid on indices [2, n-3].
inline double second_derivative_at(const std::vector<double>& f, std::size_t i, double h) {
    return (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h * h);
}

inline double l2_norm(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

}  // namespace curvedspec::fd
