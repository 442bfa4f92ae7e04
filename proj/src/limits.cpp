#include "curvedspec/limits.hpp"

#include <cmath>

#include "curvedspec/formfactor.hpp"
#include "curvedspec/hyperbolic.hpp"
#include "curvedspec/lfh.hpp"
#include "curvedspec/specfun.hpp"
#include "finite_difference.hpp"

namespace curvedspec::limits {

double schrodinger_residual(const std::function<double(double)>& potential, double energy,
                            const SampledWavefunction& psi) {
    if (psi.grid.size() < 68) throw GridError("schrodinger_residual: need >= 64 interior points");
    const double h = fd::uniform_spacing(psi.grid);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 2; i + 2 < psi.grid.size(); ++i) {
        const double d2 = fd::second_derivative_at(psi.values, i, h);
        const double r = -d2 + (potential(psi.grid[i]) - energy) * psi.values[i];
        num += r * r;
        den += psi.values[i] * psi.values[i];
    }
    return std::sqrt(num / den);
}

double energy_contraction_error(int n, int m, const ModelParams& p) {
    const auto cfg = hyperbolic::make_ptii_config(m, p);
    const auto e = hyperbolic::ptii_energy(n, cfg);  // throws UnboundStateError if unbound
    const double k2 = p.kappa2();
    return std::abs(e.eps_higgs + 2.0 * k2 * (m + 1.0) - 4.0 * k2 * (n + m + 1.0));
}

double wavefunction_contraction_error(int n, int m, const ModelParams& p,
                                      const std::vector<double>& zeta_grid) {
    check_grid(zeta_grid);
    const auto cfg = hyperbolic::make_ptii_config(m, p);
    if (n >= hyperbolic::bound_state_count(cfg))
        throw UnboundStateError("wavefunction_contraction_error: state not bound at this radius");

    SampledWavefunction hyp;
    hyp.grid = zeta_grid;
    hyp.values.resize(zeta_grid.size());
    for (std::size_t i = 0; i < zeta_grid.size(); ++i)
        hyp.values[i] = hyperbolic::ptii_wavefunction_value(n, cfg, zeta_grid[i] / p.R,
                                                            hyperbolic::WaveForm::Schrodinger);
    hyp.measure = Measure::FlatDzeta;
    normalize_inplace(hyp);

    SampledWavefunction flat = lfh::wavefunction(lfh::Branch::Plus, n, m, p, zeta_grid);

    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < zeta_grid.size(); ++i) {
        const double da = hyp.values[i] - flat.values[i];
        const double db = hyp.values[i + 1] - flat.values[i + 1];
        acc += 0.5 * (zeta_grid[i + 1] - zeta_grid[i]) * (da * da + db * db);
    }
    return std::sqrt(acc);
}

double wavefunction_peak_difference(int n, int m, const ModelParams& p,
                                    const std::vector<double>& zeta_grid, bool small_angle,
                                    std::optional<double> s_override) {
    check_grid(zeta_grid);
    const auto cfg = hyperbolic::make_ptii_config(m, p, s_override);
    if (n >= hyperbolic::bound_state_count(cfg))
        throw UnboundStateError("wavefunction_peak_difference: state not bound");

    std::vector<double> hyp(zeta_grid.size()), flat(zeta_grid.size());
    for (std::size_t i = 0; i < zeta_grid.size(); ++i) {
        const double zeta = zeta_grid[i];
        const double rho = zeta / p.R;
        if (small_angle) {
            // cosh -> exp(rho^2/2) systematically, sinh -> rho: the gaussian
            // form the figure comparison is built on
            const double t = rho * rho;
            hyp[i] = std::pow(rho, m + 0.5) *
                     std::exp(-0.5 * cfg.s * t) *
                     specfun::hyp1f1_terminating(n, m + 1.0, cfg.s * t);
        } else {
            hyp[i] = hyperbolic::ptii_wavefunction_value(n, cfg, rho,
                                                         hyperbolic::WaveForm::Schrodinger);
        }
        flat[i] = lfh::wavefunction_value(lfh::Branch::Plus, n, m, p, zeta);
    }
    auto unit_peak = [](std::vector<double>& v) {
        double peak = 0.0;
        for (double x : v) peak = std::max(peak, std::abs(x));
        if (peak > 0.0)
            for (double& x : v) x /= peak;
    };
    unit_peak(hyp);
    unit_peak(flat);
    double sup = 0.0;
    for (std::size_t i = 0; i < zeta_grid.size(); ++i)
        sup = std::max(sup, std::abs(hyp[i] - flat[i]));
    return sup;
}

double hypergeom_limit_error(int n, int m, double s, const std::vector<double>& rho_grid) {
    if (!(s > n + m + 1.0)) throw std::domain_error("hypergeom_limit_error: need s > n + m + 1");
    double sup = 0.0;
    for (double rho : rho_grid) {
        const double u = std::sinh(rho) * std::sinh(rho);
        const double lhs = specfun::hyp2f1_terminating(n, -s + n + 1.0, m + 1.0, -u);
        const double rhs = specfun::hyp1f1_terminating(n, m + 1.0, s * u);
        sup = std::max(sup, std::abs(lhs - rhs));
    }
    return sup;
}

ShapiroLimitReport shapiro_limit_check(double p, double phi, const std::vector<double>& R_values,
                                       double zeta) {
    ShapiroLimitReport rep;
    const std::complex<double> plane =
        std::exp(std::complex<double>(0.0, p * zeta * std::cos(phi)));
    for (double R : R_values) {
        const double rho = zeta / R;
        const std::complex<double> phi_p = formfactor::shapiro(rho, phi, p, R);
        rep.R_values.push_back(R);
        rep.differences.push_back(std::abs(phi_p - plane));
    }
    return rep;
}

double fit_rate(const std::vector<double>& R_values, const std::vector<double>& errors) {
    if (R_values.size() != errors.size() || R_values.size() < 2)
        throw std::invalid_argument("fit_rate: need matching sequences of length >= 2");
    // least squares of log(err) = c - rate * log(R)
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(R_values.size());
    for (std::size_t i = 0; i < R_values.size(); ++i) {
        const double x = std::log(R_values[i]);
        const double y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return -slope;
}

}  // namespace curvedspec::limits
