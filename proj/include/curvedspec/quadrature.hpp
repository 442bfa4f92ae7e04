#pragma once

#include <functional>

#include "curvedspec/types.hpp"

namespace curvedspec {

// Integration controls shared by all quadrature-backed operations.
// rho_max is the default outer cutoff for the form-factor integrals; the
// integrands there fall below 1e-14 of their peak well before rho = 6.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    double rho_max = 6.0;
};

inline void validate(const QuadratureSpec& q) {
    if (!(q.rel_tol > 0.0) || !(q.abs_tol > 0.0))
        throw std::domain_error("QuadratureSpec: tolerances must be > 0");
    if (!(q.rho_max > 0.0)) throw std::domain_error("QuadratureSpec: rho_max must be > 0");
    if (q.max_subdivisions < 1) throw std::domain_error("QuadratureSpec: max_subdivisions must be >= 1");
}

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    int subdivisions = 0;
};

// Adaptive Gauss-Kronrod (G7,K15) on [a, b]. Throws QuadratureError when the
// subdivision budget is exhausted before the tolerance is met.
QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec);

// tanh-sinh (double exponential) rule on [a, b]; robust against integrable
// endpoint singularities. Used as the fallback near the rho -> 0 endpoint.
QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                               const QuadratureSpec& spec);

// Gauss-Kronrod first, tanh-sinh fallback if the budget is exhausted.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadratureSpec& spec);

}  // namespace curvedspec
