#include "curvedspec/hyperbolic.hpp"

#include <cmath>

#include "curvedspec/quadrature.hpp"
#include "curvedspec/specfun.hpp"

namespace curvedspec::hyperbolic {

EmbeddedPoint embed(double rho, double phi, double R) {
    if (rho < 0.0) throw std::domain_error("embed: rho must be >= 0");
    if (!(R > 0.0)) throw std::domain_error("embed: R must be > 0");
    return {R * std::cosh(rho), R * std::sinh(rho) * std::cos(phi),
            R * std::sinh(rho) * std::sin(phi)};
}

double constraint_residual(const EmbeddedPoint& pt, double R) {
    return std::abs(pt.x1 * pt.x1 + pt.x2 * pt.x2 - pt.x0 * pt.x0 + R * R) / (R * R);
}

EckartSolution eckart_solution(int n, int m, double rho, double R) {
    if (n < 0 || m < 0) throw std::domain_error("eckart_solution: n, m must be >= 0");
    if (!(rho > 0.0)) throw std::domain_error("eckart_solution: rho must be > 0");
    if (!(R > 0.0)) throw std::domain_error("eckart_solution: R must be > 0");
    const int l = m + n;
    EckartSolution sol;
    sol.energy = -static_cast<double>(l) * (l + 1.0) / (R * R);
    sol.value = std::sqrt(std::sinh(rho)) * specfun::assoc_legendre_hyp(l, m, std::cosh(rho));
    return sol;
}

double higgs_potential(double rho, const ModelParams& p) {
    validate(p);
    const double t = std::tanh(rho);
    return p.kappa4() * p.R * p.R * t * t;
}

PTIIConfig make_ptii_config(int m, const ModelParams& p, std::optional<double> s_override,
                            SignBranch branch) {
    if (m < 0) throw std::domain_error("make_ptii_config: m must be >= 0");
    validate(p);
    PTIIConfig cfg;
    cfg.m = m;
    cfg.params = p;
    cfg.branch = branch;
    const double k2R2 = p.kappa2() * p.R * p.R;
    cfg.s = s_override ? *s_override : std::sqrt(k2R2 * k2R2 + 0.25);
    cfg.s_overridden = s_override.has_value();
    if (!(cfg.s > 0.5)) throw std::domain_error("make_ptii_config: s must be > 1/2");
    cfg.lambda = -0.5 - cfg.s;
    cfg.a = branch == SignBranch::Plus ? m + 0.5 : -m + 0.5;
    return cfg;
}

double ptii_potential(double rho, const PTIIConfig& cfg) {
    if (!(rho > 0.0)) throw std::domain_error("ptii_potential: rho must be > 0");
    const double R2 = cfg.params.R * cfg.params.R;
    const double sh = std::sinh(rho);
    const double ch = std::cosh(rho);
    const double aa1 = cfg.a * (cfg.a - 1.0);  // equals m^2 - 1/4 on both branches
    return (aa1 / (sh * sh) - cfg.lambda_lambda1() / (ch * ch)) / R2 +
           cfg.oscillator_constant() + 0.25 / R2;
}

PTIIEnergy ptii_energy(int n, const PTIIConfig& cfg) {
    if (n < 0) throw std::domain_error("ptii_energy: n must be >= 0");
    if (n >= bound_state_count(cfg))
        throw UnboundStateError("ptii_energy: n = " + std::to_string(n) +
                                " violates n < (s - m - 1)/2 = " +
                                std::to_string(0.5 * (cfg.s - cfg.m - 1.0)));
    const double R2 = cfg.params.R * cfg.params.R;
    const double a_plus = cfg.m + 0.5;
    const double arg = cfg.s - (0.5 + a_plus + 2.0 * n);
    PTIIEnergy e;
    e.eps_ptii = -arg * arg / R2;
    e.eps_higgs = e.eps_ptii + cfg.oscillator_constant() + 0.25 / R2;
    return e;
}

int bound_state_count(const PTIIConfig& cfg) {
    const double bound = 0.5 * (cfg.s - cfg.m - 1.0);
    if (bound <= 0.0) return 0;
    const double c = std::ceil(bound);
    // strict inequality: n < bound
    return static_cast<int>(c == bound ? bound : c);
}

namespace {

double ptii_series_value(int n, const PTIIConfig& cfg, double rho, WaveForm form, double b_param) {
    const double sh = std::sinh(rho);
    const double ch = std::cosh(rho);
    const double poly = specfun::hyp2f1_terminating(n, b_param, cfg.m + 1.0, -sh * sh);
    double v = std::pow(ch, 0.5 - cfg.s) * std::pow(sh, cfg.m + 0.5) * poly;
    if (form == WaveForm::Surface) v /= std::sqrt(sh);
    return v;
}

}  // namespace

namespace {

double ptii_origin_value(int m, WaveForm form) {
    // sinh^{m+1/2} (Schrodinger) or sinh^m (surface) leading power at rho = 0
    return (form == WaveForm::Surface && m == 0) ? 1.0 : 0.0;
}

}  // namespace

double ptii_wavefunction_value(int n, const PTIIConfig& cfg, double rho, WaveForm form) {
    if (rho == 0.0) return ptii_origin_value(cfg.m, form);
    if (!(rho > 0.0)) throw std::domain_error("ptii_wavefunction_value: rho must be >= 0");
    return ptii_series_value(n, cfg, rho, form, n + cfg.m + 1.0 - cfg.s);
}

double ptii_wavefunction_value_as_printed(int n, const PTIIConfig& cfg, double rho, WaveForm form) {
    if (rho == 0.0) return ptii_origin_value(cfg.m, form);
    if (!(rho > 0.0)) throw std::domain_error("ptii_wavefunction_value: rho must be >= 0");
    return ptii_series_value(n, cfg, rho, form, -cfg.s - n + cfg.m + 1.0);
}

double ptii_ground_surface_constant(const PTIIConfig& cfg) {
    return std::sqrt(2.0 * std::tgamma(cfg.s) /
                     (std::tgamma(cfg.m + 1.0) * std::tgamma(cfg.s - cfg.m - 1.0)));
}

std::function<double(double)> ptii_eval(int n, const PTIIConfig& cfg, WaveForm form) {
    if (n >= bound_state_count(cfg))
        throw UnboundStateError("ptii_eval: state is not bound");
    if (n == 0 && form == WaveForm::Surface) {
        const double c = ptii_ground_surface_constant(cfg);
        return [c, cfg](double rho) { return c * ptii_wavefunction_value(0, cfg, rho, WaveForm::Surface); };
    }
    // decay rate e^{(m+1+2n-s) rho}: choose the cutoff so the tail is negligible
    const double decay = cfg.s - cfg.m - 1.0 - 2.0 * n;
    const double cutoff = std::max(40.0 / decay, 10.0);
    QuadratureSpec qs;
    auto raw = [n, cfg, form](double rho) { return ptii_wavefunction_value(n, cfg, rho, form); };
    const Measure meas = form == WaveForm::Surface ? Measure::HyperbolicSinhDrho : Measure::HyperbolicDrho;
    auto dens = [raw, meas](double rho) {
        const double v = raw(rho);
        return v * v * measure_weight(meas, rho);
    };
    const double n2 = integrate(dens, 0.0, cutoff, qs).value;
    const double c = 1.0 / std::sqrt(n2);
    return [c, raw](double rho) { return c * raw(rho); };
}

SampledWavefunction ptii_wavefunction(int n, const PTIIConfig& cfg,
                                      const std::vector<double>& grid, WaveForm form) {
    check_grid(grid);
    if (!(grid.front() >= 0.0)) throw GridError("grid must be positive");
    if (n >= bound_state_count(cfg))
        throw UnboundStateError("ptii_wavefunction: state is not bound");
    SampledWavefunction f;
    f.grid = grid;
    f.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        f.values[i] = ptii_wavefunction_value(n, cfg, grid[i], form);
    f.measure = form == WaveForm::Surface ? Measure::HyperbolicSinhDrho : Measure::HyperbolicDrho;
    normalize_inplace(f);
    return f;
}

}  // namespace curvedspec::hyperbolic
