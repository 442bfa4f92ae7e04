#include "curvedspec/formfactor.hpp"

#include <cmath>

#include "curvedspec/specfun.hpp"

namespace curvedspec::formfactor {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::ExactFH: return "exact_fh";
        case Method::Hankel: return "hankel";
        case Method::ClosedForm: return "closed_form";
        case Method::RosenMorse: return "rosen_morse";
    }
    return "?";
}

std::complex<double> shapiro(double rho, double phi, double p, double R) {
    const double base = std::cosh(rho) - std::cos(phi) * std::sinh(rho);  // > 0 always
    const std::complex<double> expo(-0.5, -p * R);
    return std::exp(expo * std::log(base));
}

std::complex<double> shapiro_exponential_form(double rho, double phi, double p, double R) {
    const double c = std::cos(phi);
    return std::exp(std::complex<double>(0.5 * rho * c, rho * p * R * c));
}

namespace {

// Inner azimuthal integral of the exact transform at fixed rho:
//   Int_{-pi}^{pi} e^{(rho cos phi)/2} e^{i Q R rho cos phi} dphi
// (even integrand, computed on [0, pi] and doubled).
std::complex<double> phi_integral(double rho, double QR_rho, const QuadratureSpec& quad) {
    QuadratureSpec inner = quad;
    inner.rel_tol = std::max(quad.rel_tol * 0.1, 1e-13);
    auto re = [&](double phi) {
        const double c = std::cos(phi);
        return std::exp(0.5 * rho * c) * std::cos(QR_rho * c);
    };
    auto im = [&](double phi) {
        const double c = std::cos(phi);
        return std::exp(0.5 * rho * c) * std::sin(QR_rho * c);
    };
    const double r = 2.0 * integrate(re, 0.0, kPi, inner).value;
    const double i = 2.0 * integrate(im, 0.0, kPi, inner).value;
    return {r, i};
}

}  // namespace

double ff_exact_integrand(double rho, double Q, const hyperbolic::PTIIConfig& cfg,
                          const QuadratureSpec& quad) {
    if (rho == 0.0) return 0.0;
    const double R = cfg.params.R;
    const double psi = hyperbolic::ptii_ground_surface_constant(cfg) *
                       hyperbolic::ptii_wavefunction_value(0, cfg, rho, hyperbolic::WaveForm::Surface);
    const double kernel = R * R * psi * psi / std::cosh(rho);
    return kernel * phi_integral(rho, Q * R * rho, quad).real();
}

ExactFF ff_exact(double Q, const hyperbolic::PTIIConfig& cfg, const QuadratureSpec& quad) {
    validate(quad);
    if (hyperbolic::bound_state_count(cfg) < 1)
        throw UnboundStateError("ff_exact: configuration has no bound ground state");
    const double R = cfg.params.R;
    const double c0 = hyperbolic::ptii_ground_surface_constant(cfg);
    auto kernel = [&](double rho) {
        const double psi =
            c0 * hyperbolic::ptii_wavefunction_value(0, cfg, rho, hyperbolic::WaveForm::Surface);
        return R * R * psi * psi / std::cosh(rho);
    };
    auto re = [&](double rho) {
        return rho == 0.0 ? 0.0 : kernel(rho) * phi_integral(rho, Q * R * rho, quad).real();
    };
    auto im = [&](double rho) {
        return rho == 0.0 ? 0.0 : kernel(rho) * phi_integral(rho, Q * R * rho, quad).imag();
    };
    ExactFF out;
    out.G = integrate(re, 0.0, quad.rho_max, quad).value;
    out.imag_diag = std::abs(integrate(im, 0.0, quad.rho_max, quad).value);
    return out;
}

double ff_hankel_integrand(double rho, double Q, double R) {
    return R * R * std::exp(-1.5 * rho * rho) * (1.0 + 0.5 * rho) * rho *
           specfun::bessel_j0(Q * R * rho);
}

double ff_hankel(double Q, double R, const QuadratureSpec& quad) {
    validate(quad);
    auto f = [&](double rho) { return ff_hankel_integrand(rho, Q, R); };
    return integrate(f, 0.0, quad.rho_max, quad).value;
}

double ff_closed(double Q, double R) {
    const double b2 = Q * R * Q * R;
    const double x = b2 / 12.0;
    if (x > 700.0) throw std::overflow_error("ff_closed: Q^2 R^2 / 12 > 700 overflow guard");
    const double bracket = (b2 - 6.0) * specfun::bessel_i0(x) - b2 * specfun::bessel_i1(x);
    return 0.5 * R * R * std::exp(-b2 / 6.0) *
           (1.0 - std::sqrt(kPi / 6.0) / 12.0 * bracket);
}

double ff_reference_closed(double Q, double R) {
    const double b2 = Q * R * Q * R;
    const double x = b2 / 12.0;
    if (x > 700.0) throw std::overflow_error("ff_reference_closed: overflow guard");
    // Scaled Bessel combination e^{-x}[(1-b^2/6) I0(x) + (b^2/6) I1(x)]; the
    // e^{-x} factor keeps the expression finite for large Q R.
    const double comb = std::exp(-x) * ((1.0 - b2 / 6.0) * specfun::bessel_i0(x) +
                                        (b2 / 6.0) * specfun::bessel_i1(x));
    const double c = std::sqrt(kPi) / (8.0 * std::pow(1.5, 1.5));
    return R * R * (std::exp(-b2 / 6.0) / 3.0 + c * comb);
}

double angular_reduction(double x, const QuadratureSpec& quad) {
    auto re = [&](double phi) { return std::cos(x * std::cos(phi)); };
    // odd-in-cos(phi) symmetry cancels the imaginary part exactly over a period
    return integrate(re, 0.0, 2.0 * kPi, quad).value / (2.0 * kPi);
}

FormFactorCurve normalize_curve(const FormFactorCurve& curve) {
    if (curve.Q.size() != curve.G.size())
        throw std::invalid_argument("normalize_curve: size mismatch");
    double g0 = 0.0;
    bool found = false;
    for (std::size_t i = 0; i < curve.Q.size(); ++i) {
        if (std::abs(curve.Q[i]) < 1e-6) {
            g0 = curve.G[i];
            found = true;
            break;
        }
    }
    if (!found) throw std::invalid_argument("normalize_curve: curve does not contain Q = 0");
    if (g0 == 0.0) throw std::invalid_argument("normalize_curve: G(0) vanishes");
    FormFactorCurve out = curve;
    for (double& g : out.G) g /= g0;
    out.normalized = true;
    return out;
}

double ff_exact_reduced(double Q, const hyperbolic::PTIIConfig& cfg, const QuadratureSpec& quad) {
    validate(quad);
    const double R = cfg.params.R;
    const double N2 = std::pow(hyperbolic::ptii_ground_surface_constant(cfg), 2);
    // Chain applied to the exact kernel N^2 cosh^{-2s} sinh^2 (m = 1):
    // phi factor -> (1 + rho/2); tanh -> 1 twice (the sinh/cosh prefactor and
    // the non-volume sinh); the volume sinh -> rho; cosh -> exp(rho^2/2).
    // That leaves N^2 e^{-(s-1) rho^2} (1 + rho/2) rho, the printed Hankel
    // kernel at s = 5/2, up to the 2 pi N^2 factor dropped alongside.
    auto f = [&](double rho) {
        const double gauss = std::exp(-(cfg.s - 1.0) * rho * rho);
        const double azimuthal = angular_reduction(Q * R * rho, quad);  // quadrature, not J0
        return R * R * N2 * 2.0 * kPi * gauss * (1.0 + 0.5 * rho) * rho * azimuthal;
    };
    return integrate(f, 0.0, quad.rho_max, quad).value;
}

}  // namespace curvedspec::formfactor
