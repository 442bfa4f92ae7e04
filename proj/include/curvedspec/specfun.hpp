#pragma once

#include <stdexcept>

namespace curvedspec::specfun {

// Rising factorial (a)_k.
double pochhammer(double a, int k);

// Generalized binomial coefficient C(a, k) for real a and integer k >= 0.
double binom(double a, int k);

// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
// Requires alpha > -1 and n <= 60.
double laguerre(int n, double alpha, double x);

enum class HypKind { OneF1, TwoF1 };

// Terminating confluent series 1F1(-n; c; x), an exact sum of n+1 terms.
double hyp1f1_terminating(int n, double c, double x);

// Terminating Gauss series 2F1(-n, b; c; x), an exact sum of n+1 terms.
double hyp2f1_terminating(int n, double b, double c, double x);

// Dispatch on the series kind; b is ignored for OneF1.
double hyp_terminating(int n, double b, double c, double x, HypKind kind);

// Jacobi polynomial P_n^{(alpha,beta)}(x) by the explicit finite sum.
// Valid for negative non-integer parameters (no recurrence is used because the
// parameters of interest depend on n).
double jacobi(int n, double alpha, double beta, double x);

// Associated Legendre function P_l^m(z) on the hyperbolic cut z >= 1, with the
// convention P_l^m(z) = (z^2-1)^{m/2} d^m P_l / dz^m (no Condon-Shortley sign),
// so that P_1^1(cosh rho) = sinh rho.
double assoc_legendre_hyp(int l, int m, double z);

enum class BesselKind { J0, I0, I1 };

double bessel_j0(double x);
double bessel_i0(double x);
double bessel_i1(double x);
double bessel(BesselKind kind, double x);

}  // namespace curvedspec::specfun
