#pragma once

#include <complex>
#include <string>
#include <vector>

#include "curvedspec/hyperbolic.hpp"
#include "curvedspec/quadrature.hpp"
#include "curvedspec/types.hpp"

namespace curvedspec::formfactor {

enum class Method { ExactFH, Hankel, ClosedForm, RosenMorse };

std::string method_name(Method m);

// hbar*c used only for the CLI-facing GeV axis.
inline constexpr double kHbarC_GeV_fm = 0.1973269804;

struct FormFactorCurve {
    std::vector<double> Q;  // fm^-1
    std::vector<double> G;
    Method method = Method::Hankel;
    bool normalized = false;
    std::vector<double> imag_diagnostic;  // only populated by the exact transform
};

// Hyperbolic plane wave (cosh rho - cos phi sinh rho)^(-1/2 - i p R).
std::complex<double> shapiro(double rho, double phi, double p, double R);

// The approximate exponential rewriting e^{(rho/2) cos phi} e^{i rho p R cos phi};
// agrees with the power form to leading order in rho only.
std::complex<double> shapiro_exponential_form(double rho, double phi, double p, double R);

struct ExactFF {
    double G = 0.0;          // real part of the double integral
    double imag_diag = 0.0;  // magnitude of the imaginary residue
};

// Momentum transform of the squared ground-state surface density:
//   R^2 Int drho (sinh/cosh)(|psi0|^2/sinh) Int_{-pi}^{pi} dphi
//       e^{(rho cos phi)/2} e^{i Q R rho cos phi}
// with the exactly normalized surface state. Nested adaptive quadrature with
// the phi integral inner. Requires a single bound state (n = 0).
ExactFF ff_exact(double Q, const hyperbolic::PTIIConfig& cfg, const QuadratureSpec& quad);

// The exact rho integrand at fixed Q (phi integral already performed); used
// for the figure-4 dataset.
double ff_exact_integrand(double rho, double Q, const hyperbolic::PTIIConfig& cfg,
                          const QuadratureSpec& quad);

// R^2 Int_0^inf e^{-3 rho^2/2} (1 + rho/2) rho J0(Q R rho) drho by adaptive
// quadrature. The kernel is the printed s = 5/2 reduction.
double ff_hankel(double Q, double R, const QuadratureSpec& quad);

double ff_hankel_integrand(double rho, double Q, double R);

// The closed expression as printed:
//   (R^2/2) e^{-Q^2R^2/6} (1 - (1/12) sqrt(pi/6) [ (Q^2R^2-6) I0(Q^2R^2/12)
//                                                  - Q^2R^2 I1(Q^2R^2/12) ]).
double ff_closed(double Q, double R);

// Independent closed form of the same Hankel integral from standard tables:
//   R^2 [ (1/3) e^{-b^2/6} + (sqrt(pi)/(8 (3/2)^{3/2})) e^{-b^2/12}
//         ( (1-b^2/6) I0(b^2/12) + (b^2/6) I1(b^2/12) ) ],  b = Q R.
// Serves as the quadrature anchor.
double ff_reference_closed(double Q, double R);

// (1/2pi) Int_0^{2pi} e^{i x cos phi} dphi by quadrature; equals J0(x).
double angular_reduction(double x, const QuadratureSpec& quad = {});

// Divide by the value at Q = 0 (a point with |Q| < 1e-6 must be present).
FormFactorCurve normalize_curve(const FormFactorCurve& curve);

// The reduction chain applied to the exact integrand (phi factor -> e^{rho/2}
// -> 1 + rho/2, volume sinh -> rho, remaining sinh -> cosh, cosh -> gaussian),
// with the azimuthal integral still done by quadrature. Divided by 2 pi N^2 it
// must reproduce ff_hankel; exercised by the pipeline-consistency check.
double ff_exact_reduced(double Q, const hyperbolic::PTIIConfig& cfg, const QuadratureSpec& quad);

}  // namespace curvedspec::formfactor
