#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "curvedspec/types.hpp"

namespace curvedspec::limits {

struct ContractionReport {
    std::vector<double> R_values;                // fm
    std::vector<double> energy_errors;           // fm^-2
    std::vector<double> wavefunction_l2_errors;  // dimensionless
    double fitted_rate = 0.0;                    // exponent of error ~ R^-rate
};

// || (-d^2/dr^2 + V - E) psi || / || psi || by 5-point central differences on
// the interior of a uniform grid (>= 64 interior points).
double schrodinger_residual(const std::function<double(double)>& potential, double energy,
                            const SampledWavefunction& psi);

// | eps_higgs(n, m; kappa, R) + 2 kappa^2 (m+1) - 4 kappa^2 (n+m+1) | with s
// derived from (kappa, R).
double energy_contraction_error(int n, int m, const ModelParams& p);

// L2(d zeta) distance between the unit-normalized Schrodinger-form bound state
// at rho = zeta/R and the unit-normalized flat oscillator state of equal
// (n, nu = m), both sampled on zeta_grid.
double wavefunction_contraction_error(int n, int m, const ModelParams& p,
                                      const std::vector<double>& zeta_grid);

// Same comparison with unit-peak curves: returns the sup of the pointwise
// difference over the grid. With small_angle the hyperbolic state is taken in
// its small-angle (gaussian) form, the construction the figure comparison uses.
double wavefunction_peak_difference(int n, int m, const ModelParams& p,
                                    const std::vector<double>& zeta_grid, bool small_angle,
                                    std::optional<double> s_override = std::nullopt);

// sup over the grid of |2F1(-n, -s+n+1; m+1; -sinh^2 rho) - 1F1(-n; m+1; s sinh^2 rho)|.
double hypergeom_limit_error(int n, int m, double s, const std::vector<double>& rho_grid);

struct ShapiroLimitReport {
    std::vector<double> R_values;
    std::vector<double> differences;  // |Phi(rho = zeta/R) - exp(i p zeta cos phi)|
};

// Flat limit of the hyperbolic plane wave at a fixed flat point (zeta, phi).
ShapiroLimitReport shapiro_limit_check(double p, double phi, const std::vector<double>& R_values,
                                       double zeta);

// Least-squares slope of log(err) against log(1/R): err ~ R^-rate.
double fit_rate(const std::vector<double>& R_values, const std::vector<double>& errors);

}  // namespace curvedspec::limits
