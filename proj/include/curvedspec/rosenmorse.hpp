#pragma once

#include <stdexcept>
#include <tuple>

namespace curvedspec::rosenmorse {

// Trigonometric Rosen-Morse parameters in hbar = 1, 2 mu = 1 units:
// b is dimensionless (b = d G), d is the box length scale in fm.
struct RMParams {
    double b = 2.0;
    double d = 1.0;
    int l = 0;

    double G() const { return b / d; }
};

inline void validate(const RMParams& p) {
    if (!(p.b > 0.0)) throw std::domain_error("RMParams: b must be > 0");
    if (!(p.d > 0.0)) throw std::domain_error("RMParams: d must be > 0");
    if (p.l < 0) throw std::domain_error("RMParams: l must be >= 0");
}

// (1/d^2) [ l(l+1) csc^2(r/d) - 2 b cot(r/d) ] on 0 < r < pi d.
double rmt_potential(double r, const RMParams& p);

// Coefficients of r^-2, r^-1 and r in the small-r expansion:
// ( l(l+1), -2b/d, 2b/(3d^3) ).
std::tuple<double, double, double> rmt_cornell_coeffs(const RMParams& p);

// -b^2/(d^2 N^2) + N^2/d^2 with N = n + l + 1.
double rmt_energy(int n, int l, const RMParams& p);

// (b(b^2+1)/(Qd)) atan( 16 b d Q / ((Qd)^4 + 4(2b^2-1)(Qd)^2 + 16 b^2(b^2+1)) ),
// continuously extended to 1 at Q = 0.
double rmt_formfactor(double Q, const RMParams& p);

}  // namespace curvedspec::rosenmorse
