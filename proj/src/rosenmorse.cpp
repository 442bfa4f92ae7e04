#include "curvedspec/rosenmorse.hpp"

#include <cmath>

namespace curvedspec::rosenmorse {

double rmt_potential(double r, const RMParams& p) {
    validate(p);
    const double pi_d = 3.14159265358979323846 * p.d;
    if (!(r > 0.0 && r < pi_d))
        throw std::domain_error("rmt_potential: r must lie in (0, pi d)");
    const double x = r / p.d;
    const double s = std::sin(x);
    const double cot = std::cos(x) / s;
    return (p.l * (p.l + 1.0) / (s * s) - 2.0 * p.b * cot) / (p.d * p.d);
}

std::tuple<double, double, double> rmt_cornell_coeffs(const RMParams& p) {
    validate(p);
    return {p.l * (p.l + 1.0), -2.0 * p.b / p.d, 2.0 * p.b / (3.0 * p.d * p.d * p.d)};
}

double rmt_energy(int n, int l, const RMParams& p) {
    validate(p);
    if (n < 0 || l < 0) throw std::domain_error("rmt_energy: n, l must be >= 0");
    const double N = n + l + 1.0;
    return -p.b * p.b / (p.d * p.d * N * N) + N * N / (p.d * p.d);
}

double rmt_formfactor(double Q, const RMParams& p) {
    validate(p);
    if (Q < 0.0) throw std::domain_error("rmt_formfactor: Q must be >= 0");
    const double qd = Q * p.d;
    const double b = p.b;
    if (qd == 0.0) return 1.0;  // continuous extension, atan(x) ~ x
    const double denom = qd * qd * qd * qd + 4.0 * (2.0 * b * b - 1.0) * qd * qd +
                         16.0 * b * b * (b * b + 1.0);
    return b * (b * b + 1.0) / qd * std::atan2(16.0 * b * qd, denom);
}

}  // namespace curvedspec::rosenmorse
