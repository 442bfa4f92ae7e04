#include "curvedspec/checks.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "curvedspec/eigensolve.hpp"
#include "curvedspec/figures.hpp"
#include "curvedspec/formfactor.hpp"
#include "curvedspec/hyperbolic.hpp"
#include "curvedspec/lfh.hpp"
#include "curvedspec/limits.hpp"
#include "curvedspec/quadrature.hpp"
#include "curvedspec/rosenmorse.hpp"
#include "curvedspec/specfun.hpp"

namespace curvedspec::checks {

namespace {

namespace sf = curvedspec::specfun;
namespace hy = curvedspec::hyperbolic;
namespace ff = curvedspec::formfactor;
namespace rm = curvedspec::rosenmorse;

struct Collector {
    CheckReport report;

    void upper(const std::string& id, const std::string& module, double measured,
               double threshold, const std::string& note = "") {
        report.results.push_back({id, module,
                                  measured < threshold ? Status::Pass : Status::Fail, measured,
                                  threshold, "<", note});
    }
    void lower(const std::string& id, const std::string& module, double measured,
               double threshold, const std::string& note = "") {
        report.results.push_back({id, module,
                                  measured > threshold ? Status::Pass : Status::Fail, measured,
                                  threshold, ">", note});
    }
    void in_range(const std::string& id, const std::string& module, double measured, double lo,
                  double hi, const std::string& note = "") {
        const bool ok = measured >= lo && measured <= hi;
        CheckResult r{id, module, ok ? Status::Pass : Status::Fail, measured, lo, "in", note};
        r.note = note.empty() ? ("range [" + format_double(lo) + ", " + format_double(hi) + "]")
                              : note;
        r.threshold = hi;
        report.results.push_back(r);
    }
    void exact(const std::string& id, const std::string& module, bool ok, double measured,
               const std::string& note = "") {
        report.results.push_back(
            {id, module, ok ? Status::Pass : Status::Fail, measured, 0.0, "==", note});
    }
    void documented(const std::string& id, const std::string& module, double measured,
                    const std::string& note) {
        report.results.push_back({id, module, Status::Documented, measured, 0.0, "", note});
    }
};

// ---------------------------------------------------------------- specfun ---

void check_specfun(Collector& c) {
    // Laguerre vs terminating 1F1 identity
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
        for (int nu = 0; nu <= 5; ++nu)
            for (double x : {0.0, 0.3, 1.7, 4.2, 9.5, 17.0, 30.0}) {
                const double lhs = sf::laguerre(n, nu, x);
                const double rhs = sf::binom(n + nu, n) * sf::hyp1f1_terminating(n, nu + 1.0, x);
                const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
                worst = std::max(worst, std::abs(lhs - rhs) / scale);
            }
    c.upper("laguerre_1f1_identity", "specfun", worst, 1e-11);

    // Legendre-Jacobi identity with the derived proportionality constant
    worst = 0.0;
    for (int l = 0; l <= 5; ++l)
        for (int m = 0; m <= l; ++m)
            for (double rho : {0.1, 0.4, 0.9, 1.6, 2.4, 3.0}) {
                const double z = std::cosh(rho);
                const double lhs = sf::assoc_legendre_hyp(l, m, z);
                double dfact = 1.0;  // (2l)! / (2^l l! (l-m)!)
                for (int i = 1; i <= l; ++i) dfact *= (l + i) / 2.0;
                for (int i = 1; i <= l - m; ++i) dfact /= i;
                const double cst = dfact / sf::binom(-m - 0.5, l - m);
                const double rhs = cst * std::pow(std::sinh(rho), l) *
                                   sf::jacobi(l - m, -l - 0.5, -l - 0.5, 1.0 / std::tanh(rho));
                worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
            }
    c.upper("legendre_jacobi_identity", "specfun", worst, 1e-10,
            "includes the proportionality constant the printed relation omits");

    // I0' = I1 by central differences
    worst = 0.0;
    for (double x = 0.5; x <= 20.0; x += 0.5) {
        const double h = 1e-5;
        const double d = (sf::bessel_i0(x + h) - sf::bessel_i0(x - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(d - sf::bessel_i1(x)) / std::abs(sf::bessel_i1(x)));
    }
    c.upper("bessel_i0_prime_equals_i1", "specfun", worst, 1e-7);

    // J0'' + J0'/x + J0 = 0 residual by 5-point differences. Stencils must not
    // straddle the series/asymptotic seam at x = 12: the branches agree only to
    // ~5e-13 there, which h^-2 would amplify far above the ODE error.
    worst = 0.0;
    for (double x = 0.1; x <= 50.0; x += 0.7) {
        const double h = 1e-3;
        if (std::abs(x - 12.0) < 3.0 * h) continue;
        double f[5];
        for (int j = -2; j <= 2; ++j) f[j + 2] = sf::bessel_j0(x + j * h);
        const double fp = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
        const double fpp = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
        worst = std::max(worst, std::abs(fpp + fp / x + f[2]));
    }
    c.upper("bessel_j0_ode_residual", "specfun", worst, 1e-8);

    // the seam itself: both branches at x = 12 within ~1e-12 of each other
    {
        const double seam = std::abs(sf::bessel_j0(12.0) - sf::bessel_j0(std::nextafter(12.0, 13.0)));
        c.upper("bessel_j0_branch_seam", "specfun", seam, 2e-12);
    }
}

// -------------------------------------------------------------------- lfh ---

void check_lfh(Collector& c, const RunConfig& cfg) {
    const ModelParams p = cfg.model();
    const double k2 = p.kappa2();

    // exact degeneracy map
    bool deg = true;
    for (int n = 1; n <= 6; ++n)
        for (int nu = 0; nu <= 4; ++nu)
            deg = deg && lfh::energy_sq(n, nu, p) == lfh::energy_sq(n - 1, nu + 1, p);
    c.exact("lfh_degeneracy_map", "lfh", deg, deg ? 0.0 : 1.0, "E^2(n,nu) == E^2(n-1,nu+1)");

    // diagonalization oracle for the full equation
    double worst = 0.0;
    for (int nu = 1; nu <= 3; ++nu) {
        auto V = [&](double z) { return lfh::potential(lfh::Branch::Plus, z, nu, p); };
        const auto eig = schrodinger_lowest_eigenvalues(V, 0.0, 12.0 / p.kappa, 4096, 4);
        for (int n = 0; n < 4; ++n) {
            const double expect = lfh::energy_sq(n, nu, p);
            worst = std::max(worst, std::abs(eig[n] - expect) / expect);
        }
    }
    c.upper("lfh_diagonalization_oracle", "lfh", worst, 1e-3, "lowest 4 levels, nu in {1,2,3}");

    // annihilation of the ground state, analytic derivative
    {
        QuadratureSpec qs;
        auto af = [&](double z) {
            const double psi = lfh::wavefunction_value(lfh::Branch::Plus, 0, 1, p, z);
            const double dpsi = (1.5 / z - k2 * z) * psi;  // exact derivative of z^{3/2} e^{-k2 z^2/2}
            return std::pow(dpsi + lfh::superpotential(z, 1, p) * psi, 2);
        };
        auto nf = [&](double z) {
            return std::pow(lfh::wavefunction_value(lfh::Branch::Plus, 0, 1, p, z), 2);
        };
        const double num = integrate(af, 1e-6, 12.0 / p.kappa, qs).value;
        const double den = integrate(nf, 1e-6, 12.0 / p.kappa, qs).value;
        c.upper("lfh_annihilation_analytic", "lfh", std::sqrt(std::max(num, 0.0) / den), 1e-6);
    }

    // annihilation with the finite-difference ladder
    {
        const auto grid = uniform_grid(0.3 / p.kappa, 14.0 / p.kappa, 4096);
        const auto psi = lfh::wavefunction(lfh::Branch::Plus, 0, 1, p, grid);
        const auto apsi = lfh::apply_ladder(lfh::Ladder::A, psi, 1, p);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            num += apsi.values[i] * apsi.values[i];
            den += psi.values[i] * psi.values[i];
        }
        c.upper("lfh_annihilation_fd", "lfh", std::sqrt(num / den), 1e-4);
    }

    // B then B^+ rescales by E^2
    {
        const auto grid = uniform_grid(0.3 / p.kappa, 14.0 / p.kappa, 4096);
        double worst_ladder = 0.0;
        for (int n = 0; n <= 2; ++n) {
            const auto psi = lfh::wavefunction(lfh::Branch::Plus, n, 1, p, grid);
            const auto b = lfh::apply_ladder(lfh::Ladder::B, psi, 1, p);
            const auto bb = lfh::apply_ladder(lfh::Ladder::Bdag, b, 1, p);
            const double e2 = lfh::energy_sq(n, 1, p);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 8; i + 8 < grid.size(); ++i) {
                num += std::pow(bb.values[i] - e2 * psi.values[i], 2);
                den += std::pow(e2 * psi.values[i], 2);
            }
            worst_ladder = std::max(worst_ladder, std::sqrt(num / den));
        }
        c.upper("lfh_ladder_bdagb_rescale", "lfh", worst_ladder, 1e-4);
    }

    // Gram matrix of the lowest four states
    {
        const auto grid = uniform_grid(1e-4, 14.0 / p.kappa, 8192);
        std::vector<SampledWavefunction> states;
        for (int n = 0; n <= 3; ++n)
            states.push_back(lfh::wavefunction(lfh::Branch::Plus, n, 1, p, grid));
        double worst_gram = 0.0;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
                    const double h = grid[k + 1] - grid[k];
                    acc += 0.5 * h * (states[i].values[k] * states[j].values[k] +
                                      states[i].values[k + 1] * states[j].values[k + 1]);
                }
                worst_gram = std::max(worst_gram, std::abs(acc - (i == j ? 1.0 : 0.0)));
            }
        c.upper("lfh_orthonormality_gram", "lfh", worst_gram, 1e-6);
    }

    // SUSY towers
    const auto susy = lfh::susy_spectrum_check(3, 1, p, 4096);
    c.upper("susy_ground_state_zero", "lfh", susy.ground_state_abs_error, 5e-4 * k2);
    c.upper("susy_partner_degeneracy", "lfh", susy.partner_rel_error, 1e-3);
    c.upper("susy_tower_levels", "lfh", susy.max_rel_error, 1e-3);
    c.upper("susy_nilpotency", "lfh", susy.nilpotency_residual, 1e-10);
    c.upper("susy_anticommutator_blocks", "lfh", susy.anticommutator_rel_error, 1e-4);

    // conformal algebra
    const auto conf = lfh::conformal_commutator_check(p, {{0, 1}, {1, 1}, {0, 2}});
    c.upper("conformal_jp_jm_commutator", "lfh", conf.commutator_jpjm_rel_error, 1e-4);
    c.upper("conformal_d0_jp_commutator", "lfh", conf.commutator_d0jp_rel_error, 1e-4);
    c.upper("conformal_d0_jm_commutator", "lfh", conf.commutator_d0jm_rel_error, 1e-4);
    c.upper("conformal_hamiltonian_action", "lfh", conf.hamiltonian_rel_error, 1e-4);
}

// ------------------------------------------------------------- hyperbolic ---

void check_hyperbolic(Collector& c, const RunConfig& cfg) {
    const ModelParams p = cfg.model();

    // embedding constraint, randomized
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> urho(0.0, 4.0), uphi(-3.1416, 3.1416),
        uR(0.3, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double R = uR(rng);
        worst = std::max(worst,
                         hy::constraint_residual(hy::embed(urho(rng), uphi(rng), R), R));
    }
    c.upper("embed_constraint", "hyperbolic", worst, 1e-12);

    // Eckart energies equal the isometry values exactly
    bool exact_e = true;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            const int l = n + m;
            const double lhs = hy::eckart_solution(n, m, 1.0, p.R).energy;
            exact_e = exact_e && lhs == -double(l) * (l + 1.0) / (p.R * p.R);
        }
    c.exact("eckart_so12_energies", "hyperbolic", exact_e, exact_e ? 0.0 : 1.0);

    // PTII vs Higgs potential identity on random samples (derived s)
    const auto cfg_derived = hy::make_ptii_config(1, p);
    std::uniform_real_distribution<double> urho2(0.05, 4.0);
    std::uniform_int_distribution<int> um(0, 3);
    worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double rho = urho2(rng);
        const auto cc = hy::make_ptii_config(um(rng), p);
        const double lhs = hy::ptii_potential(rho, cc) -
                           (cc.a * (cc.a - 1.0) / (p.R * p.R * std::sinh(rho) * std::sinh(rho)) +
                            0.25 / (p.R * p.R));
        const double rhs = hy::higgs_potential(rho, p);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1.0));
    }
    c.upper("ptii_higgs_identity", "hyperbolic", worst, 1e-10);

    // discretized ground state at the figure parameters (s = 5/2 override)
    {
        const auto cc = hy::make_ptii_config(1, p, cfg.figure_s());
        auto V = [&](double rho) { return hy::ptii_potential(rho, cc); };
        auto scaled = [&](double rho) { return V(rho) * p.R * p.R; };
        const auto eig = schrodinger_lowest_eigenvalues(
            [&](double rho) { return scaled(rho); }, 0.0, 8.0, 4096, 1);
        const double expect = hy::ptii_energy(0, cc).eps_higgs * p.R * p.R;
        c.upper("ptii_ground_eigenvalue_s2p5", "hyperbolic",
                std::abs(eig[0] - expect) / std::abs(expect), 5e-3);
    }

    // three states at s = 10.6
    {
        const auto cc = hy::make_ptii_config(1, p, 10.6);
        auto scaled = [&](double rho) { return hy::ptii_potential(rho, cc) * p.R * p.R; };
        const auto eig = schrodinger_lowest_eigenvalues(scaled, 0.0, 8.0, 4096, 3);
        double w = 0.0;
        for (int n = 0; n < 3; ++n) {
            const double expect = hy::ptii_energy(n, cc).eps_higgs * p.R * p.R;
            w = std::max(w, std::abs(eig[n] - expect) / std::abs(expect));
        }
        c.upper("ptii_eigenvalues_s10p6", "hyperbolic", w, 5e-3);
    }

    c.exact("ptii_bound_state_count_s2p5", "hyperbolic",
            hy::bound_state_count(hy::make_ptii_config(1, p, cfg.figure_s())) == 1,
            hy::bound_state_count(hy::make_ptii_config(1, p, cfg.figure_s())));

    // Beta-integral normalization of the ground surface form
    {
        const auto cc = hy::make_ptii_config(1, p, cfg.figure_s());
        const auto psi = hy::ptii_eval(0, cc, hy::WaveForm::Surface);
        QuadratureSpec qs;
        qs.rel_tol = 1e-12;
        auto dens = [&](double rho) {
            const double v = psi(rho);
            return v * v * std::sinh(rho);
        };
        const double n2 = integrate(dens, 0.0, 60.0, qs).value;
        c.upper("ptii_ground_normalization_beta", "hyperbolic", std::abs(n2 - 1.0), 1e-8,
                "closed Gamma constant against the sinh rho drho measure");
    }

    // node counts
    {
        const auto cc = hy::make_ptii_config(1, p, 10.6);
        bool nodes_ok = true;
        for (int n = 0; n < hy::bound_state_count(cc) && n <= 2; ++n) {
            const auto grid = uniform_grid(1e-3, 6.0, 4000);
            int sign_changes = 0;
            double prev = hy::ptii_wavefunction_value(n, cc, grid[0], hy::WaveForm::Schrodinger);
            for (std::size_t i = 1; i < grid.size(); ++i) {
                const double v = hy::ptii_wavefunction_value(n, cc, grid[i], hy::WaveForm::Schrodinger);
                if (prev * v < 0.0) ++sign_changes;
                prev = v;
            }
            nodes_ok = nodes_ok && sign_changes == n;
        }
        c.exact("ptii_node_counts", "hyperbolic", nodes_ok, nodes_ok ? 0.0 : 1.0);
    }
}

// ----------------------------------------------------------------- limits ---

void check_limits(Collector& c, const RunConfig& cfg) {
    const ModelParams p = cfg.model();

    // residual verifier on all three exact families
    {
        double worst = 0.0;
        // flat oscillator
        {
            const auto grid = uniform_grid(0.35 / p.kappa, 10.0 / p.kappa, 2048);
            const auto psi = lfh::wavefunction(lfh::Branch::Plus, 0, 1, p, grid);
            auto V = [&](double z) { return lfh::potential(lfh::Branch::Plus, z, 1, p); };
            worst = std::max(worst,
                             limits::schrodinger_residual(V, lfh::energy_sq(0, 1, p), psi) /
                                 lfh::energy_sq(0, 1, p));
        }
        // Eckart reduction (scaled by R^2: -U'' + [a(a-1)/sinh^2 + 1/4] U = E R^2 U)
        {
            const auto grid = uniform_grid(0.2, 3.0, 2048);
            SampledWavefunction u;
            u.grid = grid;
            for (double rho : grid) u.values.push_back(hy::eckart_solution(1, 1, rho, p.R).value);
            u.measure = Measure::HyperbolicDrho;
            auto V = [&](double rho) {
                const double sh = std::sinh(rho);
                return 0.75 / (sh * sh) + 0.25;
            };
            const double e_scaled = hy::eckart_solution(1, 1, 1.0, p.R).energy * p.R * p.R;
            worst = std::max(worst, limits::schrodinger_residual(V, e_scaled, u) /
                                        std::abs(e_scaled));
        }
        // PTII bound states (scaled by R^2), corrected polynomial family
        {
            const auto cc = hy::make_ptii_config(1, p, 10.6);
            for (int n = 0; n <= 2; ++n) {
                const auto grid = uniform_grid(0.15, 5.0, 2048);
                SampledWavefunction u;
                u.grid = grid;
                for (double rho : grid)
                    u.values.push_back(hy::ptii_wavefunction_value(n, cc, rho,
                                                                   hy::WaveForm::Schrodinger));
                u.measure = Measure::HyperbolicDrho;
                auto V = [&](double rho) { return hy::ptii_potential(rho, cc) * p.R * p.R; };
                const double e_scaled = hy::ptii_energy(n, cc).eps_higgs * p.R * p.R;
                worst = std::max(worst, limits::schrodinger_residual(V, e_scaled, u) /
                                            std::abs(e_scaled));
            }
        }
        c.upper("residual_exact_families", "limits", worst, 1e-4,
                "flat oscillator, Eckart and PTII closed forms against their equations");
    }

    // energy contraction: ratio and fitted rate at kappa = 1
    {
        ModelParams pk{1.0, 20.0};
        const double e1 = limits::energy_contraction_error(0, 1, pk);
        pk.R = 40.0;
        const double e2 = limits::energy_contraction_error(0, 1, pk);
        c.in_range("energy_contraction_ratio", "limits", e1 / e2, 3.5, 4.5);

        std::vector<double> Rs, errs;
        for (double R : {10.0, 20.0, 40.0, 80.0}) {
            ModelParams pr{1.0, R};
            Rs.push_back(R);
            errs.push_back(limits::energy_contraction_error(0, 1, pr));
        }
        c.in_range("energy_contraction_rate", "limits", limits::fit_rate(Rs, errs), 1.8, 2.2);
        bool monotone = true;
        for (std::size_t i = 0; i + 1 < errs.size(); ++i) monotone = monotone && errs[i + 1] < errs[i];
        c.exact("energy_contraction_monotone", "limits", monotone, monotone ? 0.0 : 1.0);

        // extrapolated intercept at 1/R^2 -> 0 (linear fit in x = 1/R^2)
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < Rs.size(); ++i) {
            const double x = 1.0 / (Rs[i] * Rs[i]);
            sx += x;
            sy += errs[i];
            sxx += x * x;
            sxy += x * errs[i];
        }
        const double n = static_cast<double>(Rs.size());
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double intercept = (sy - slope * sx) / n;
        c.upper("contraction_zero_intercept", "limits", std::abs(intercept), 1e-3 * 1.0);
    }

    // wavefunction contraction monotone in R at kappa = 1
    {
        const auto grid = uniform_grid(1e-3, 3.0, 512);
        std::vector<double> errs;
        for (double R : {5.0, 10.0, 20.0}) {
            ModelParams pr{1.0, R};
            errs.push_back(limits::wavefunction_contraction_error(0, 1, pr, grid));
        }
        const bool mono = errs[1] < errs[0] && errs[2] < errs[1];
        c.exact("wavefunction_contraction_monotone", "limits", mono, errs.back());
    }

    // hypergeometric limit rate: error ~ 1/s at fixed kappa^2 zeta^2 = 1
    {
        auto err_at = [&](double s) {
            const double rho = 1.0 / std::sqrt(s);
            return limits::hypergeom_limit_error(1, 1, s, {rho});
        };
        const double r = err_at(100.0) / err_at(1000.0);
        c.in_range("hypergeom_limit_ratio", "limits", r, 8.0, 12.0);
        std::vector<double> ss{100.0, 200.0, 400.0, 800.0}, es;
        for (double s : ss) es.push_back(err_at(s));
        c.in_range("hypergeom_limit_rate", "limits", limits::fit_rate(ss, es), 0.8, 1.2);
    }

    // Shapiro flat limit halves as R doubles
    {
        const auto rep = limits::shapiro_limit_check(5.0 / 4.0, 0.9, {4.0, 8.0, 16.0, 32.0}, 1.0);
        double worst_ratio_lo = 10.0, worst_ratio_hi = 0.0;
        for (std::size_t i = 0; i + 1 < rep.differences.size(); ++i) {
            const double ratio = rep.differences[i] / rep.differences[i + 1];
            worst_ratio_lo = std::min(worst_ratio_lo, ratio);
            worst_ratio_hi = std::max(worst_ratio_hi, ratio);
        }
        c.in_range("shapiro_flat_limit_halving", "limits", worst_ratio_lo, 1.6, 2.4);
        c.in_range("shapiro_flat_limit_halving_hi", "limits", worst_ratio_hi, 1.6, 2.4);
    }
}

// ------------------------------------------------------------- formfactor ---

void check_formfactor(Collector& c, const RunConfig& cfg) {
    const double R = cfg.R_fm;
    const auto ptii = hy::make_ptii_config(1, cfg.model(), cfg.figure_s());

    // quadrature anchor: hankel quadrature against the table closed form
    {
        double worst = 0.0;
        for (double qr = 0.0; qr <= 10.0; qr += 0.5) {
            const double q = qr / R;
            const double a = ff::ff_hankel(q, R, cfg.quad);
            const double b = ff::ff_reference_closed(q, R);
            worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-12));
        }
        c.upper("quadrature_anchor", "formfactor", worst, 1e-6);
    }

    // halving tolerances moves the result by < 1e-8
    {
        QuadratureSpec tight = cfg.quad;
        tight.rel_tol *= 0.5;
        tight.abs_tol *= 0.5;
        const double q = 5.0;
        const double a = ff::ff_hankel(q, R, cfg.quad);
        const double b = ff::ff_hankel(q, R, tight);
        c.upper("quadrature_tolerance_halving", "formfactor", std::abs(a - b) / std::abs(b), 1e-8);
    }

    // reduced pipeline reproduces the Hankel transform
    {
        const double n2 = std::pow(hy::ptii_ground_surface_constant(ptii), 2);
        double worst = 0.0;
        for (double q : {0.0, 2.0, 5.0}) {
            const double a = ff::ff_exact_reduced(q, ptii, cfg.quad) / (2.0 * 3.14159265358979323846 * n2);
            const double b = ff::ff_hankel(q, R, cfg.quad);
            worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-12));
        }
        c.upper("pipeline_reduction_consistency", "formfactor", worst, 1e-6,
                "phi factor, volume and cosh reductions applied to the exact kernel");
    }

    // imaginary residue of the exact transform: exactly zero at the origin by
    // the phi -> pi - phi symmetry, O(0.1..0.8 |G|) at finite Q because the
    // cos(phi)-dependent real exponential breaks that symmetry
    {
        const auto r0 = ff::ff_exact(0.0, ptii, cfg.quad);
        c.upper("ff_exact_imag_vanishes_at_origin", "formfactor", r0.imag_diag, 1e-12);
        std::ostringstream note;
        note << "imag/|G| measured:";
        for (double q : {2.5, 7.0, 15.0}) {
            const auto r = ff::ff_exact(q, ptii, cfg.quad);
            note << " Q=" << format_double(q) << " -> " << format_double(r.imag_diag / std::abs(r.G));
        }
        note << "; the odd part cancels only partially (the e^{rho cos(phi)/2} weight "
                "is not even in cos(phi)), so the residue is a genuine O(Q R rho) effect, "
                "not a sub-1e-3 one";
        const auto r = ff::ff_exact(2.5, ptii, cfg.quad);
        c.documented("ff_exact_imag_residue", "findings", r.imag_diag / std::abs(r.G), note.str());
    }

    // evenness in Q
    {
        double worst = 0.0;
        for (double q : {0.8, 3.3}) {
            worst = std::max(worst, std::abs(ff::ff_closed(q, R) - ff::ff_closed(-q, R)));
            worst = std::max(worst,
                             std::abs(ff::ff_hankel(q, R, cfg.quad) - ff::ff_hankel(-q, R, cfg.quad)));
        }
        c.upper("ff_even_in_q", "formfactor", worst, 1e-14);
    }

    // angular reduction equals J0
    {
        double worst = 0.0;
        for (double x : {0.0, 1.0, 2.4048, 5.0, 10.0})
            worst = std::max(worst, std::abs(ff::angular_reduction(x, cfg.quad) - sf::bessel_j0(x)));
        c.upper("angular_reduction_j0", "formfactor", worst, 1e-8);
    }

    // Q^4 G tail of the table-consistent closed form grows ~ Q
    {
        std::vector<double> qs, vals;
        for (double qr = 20.0; qr <= 40.0; qr += 2.5) {
            qs.push_back(qr / R);
            vals.push_back(std::abs(std::pow(qr / R, 4) * ff::ff_reference_closed(qr / R, R)));
        }
        // fit_rate fits err ~ R^-rate; a growing tail gives a negative rate
        const double rate = -limits::fit_rate(qs, vals);
        c.in_range("q4_tail_exponent_reference", "formfactor", rate, 0.8, 1.2,
                   "power-law tail of the table-consistent form; the printed form decays instead");
    }

    // normalization plumbing
    {
        ff::FormFactorCurve curve;
        curve.method = ff::Method::ClosedForm;
        for (double q : {0.0, 1.0, 2.0}) {
            curve.Q.push_back(q);
            curve.G.push_back(7.3 * ff::ff_closed(q, R));
        }
        const auto n1 = ff::normalize_curve(curve);
        const auto n2 = ff::normalize_curve(n1);
        double worst = std::abs(n1.G[0] - 1.0);
        for (std::size_t i = 0; i < n1.G.size(); ++i) {
            worst = std::max(worst, std::abs(n1.G[i] - n2.G[i]));
            worst = std::max(worst, std::abs(n1.G[i] - ff::ff_closed(curve.Q[i], R) /
                                                           ff::ff_closed(0.0, R)));
        }
        c.upper("normalize_idempotent_scale_invariant", "formfactor", worst, 1e-14);
    }
}

// ------------------------------------------------------------- rosenmorse ---

void check_rosenmorse(Collector& c, const RunConfig& cfg) {
    const auto base = cfg.rm_params();

    // exact N-degeneracy
    bool deg = true;
    for (int n = 1; n <= 4; ++n)
        for (int l = 0; l <= 3; ++l)
            deg = deg && rm::rmt_energy(n, l, base) == rm::rmt_energy(n - 1, l + 1, base);
    c.exact("rmt_degeneracy", "rosenmorse", deg, deg ? 0.0 : 1.0);

    // discretized spectrum vs closed energies for N <= 3
    {
        double worst = 0.0;
        const double pi_d = 3.14159265358979323846 * base.d;
        for (int l = 0; l <= 2; ++l) {
            rm::RMParams pl = base;
            pl.l = l;
            const std::function<double(double)> V = [pl](double r) {
                return rm::rmt_potential(r, pl);
            };
            const std::size_t k = static_cast<std::size_t>(3 - l);
            const auto eig = schrodinger_lowest_eigenvalues(V, 0.0, pi_d, 4096, k);
            for (std::size_t n = 0; n < k; ++n) {
                const double expect = rm::rmt_energy(static_cast<int>(n), l, base);
                worst = std::max(worst, std::abs(eig[n] - expect) / std::abs(expect));
            }
        }
        c.upper("rmt_spectrum_diagonalization", "rosenmorse", worst, 5e-3);
    }

    // form factor normalization, evenness in Q handled by Q >= 0 domain
    c.exact("rmt_ff_origin", "rosenmorse", rm::rmt_formfactor(0.0, base) == 1.0,
            rm::rmt_formfactor(0.0, base));

    // large-Q asymptote of Q^4 G
    {
        const double q = 100.0 / base.d;
        const double asym = 16.0 * base.b * base.b * (base.b * base.b + 1.0) /
                            (base.d * base.d * base.d * base.d);
        const double v = std::pow(q, 4) * rm::rmt_formfactor(q, base);
        c.upper("rmt_q4_asymptote", "rosenmorse", std::abs(v - asym) / asym, 1e-2);
    }

    // Cornell expansion matches the potential at small r and a finite-difference
    // Taylor extraction of the coefficients
    {
        rm::RMParams pl = base;
        pl.l = 1;
        const auto [c2, c1, clin] = rm::rmt_cornell_coeffs(pl);
        double worst = 0.0;
        for (double r : {0.01 * pl.d, 0.03 * pl.d, 0.05 * pl.d}) {
            const double v = rm::rmt_potential(r, pl);
            const double approx = c2 / (r * r) + c1 / r + clin * r;
            worst = std::max(worst, std::abs(v - approx) / std::abs(v));
        }
        c.upper("rmt_cornell_truncation", "rosenmorse", worst, 1e-3);

        // extract the 1/r^2 and 1/r coefficients from values at tiny r,
        // fitting c2/r^2 + c1/r + c0 (the expansion has a constant term)
        const double r0 = 1e-3 * pl.d;
        double A[3][4];
        for (int i = 0; i < 3; ++i) {
            const double r = (i + 1.0) * r0;
            A[i][0] = 1.0 / (r * r);
            A[i][1] = 1.0 / r;
            A[i][2] = 1.0;
            A[i][3] = rm::rmt_potential(r, pl);
        }
        for (int col = 0; col < 3; ++col) {  // Gaussian elimination, partial pivot
            int piv = col;
            for (int r2 = col + 1; r2 < 3; ++r2)
                if (std::abs(A[r2][col]) > std::abs(A[piv][col])) piv = r2;
            std::swap(A[piv], A[col]);
            for (int r2 = 0; r2 < 3; ++r2) {
                if (r2 == col) continue;
                const double f = A[r2][col] / A[col][col];
                for (int cc = col; cc < 4; ++cc) A[r2][cc] -= f * A[col][cc];
            }
        }
        const double c2_fd = A[0][3] / A[0][0];
        const double c1_fd = A[1][3] / A[1][1];
        const double err = std::max(std::abs(c2_fd - c2) / std::abs(c2),
                                    std::abs(c1_fd - c1) / std::abs(c1));
        c.upper("rmt_cornell_fd_extraction", "rosenmorse", err, 1e-4);
    }
}

// -------------------------------------------------- figures & documented ----

void check_figures(Collector& c, const RunConfig& cfg) {
    // fig1 shape: unit peaks, peak distance, pointwise closeness
    {
        const auto ds = figures::make_fig1(cfg);
        double pk1 = 0.0, pk2 = 0.0, z1 = 0.0, z2 = 0.0, maxdiff = 0.0;
        for (const auto& row : ds.rows) {
            if (row[1] > pk1) {
                pk1 = row[1];
                z1 = row[0];
            }
            if (row[2] > pk2) {
                pk2 = row[2];
                z2 = row[0];
            }
            if (row[0] <= 1.5) maxdiff = std::max(maxdiff, std::abs(row[1] - row[2]));
        }
        c.exact("fig1_unit_peaks", "cli", std::abs(pk1 - 1.0) < 1e-12 && std::abs(pk2 - 1.0) < 1e-12,
                std::max(std::abs(pk1 - 1.0), std::abs(pk2 - 1.0)));
        c.upper("fig1_peak_distance", "cli", std::abs(z1 - z2), 0.05);
        c.upper("fig1_max_pointwise_diff", "cli", maxdiff, 0.1);
    }

    // the exact (not small-angle) hyperbolic state does NOT reproduce the
    // figure; record the measured deviation
    {
        const auto grid = uniform_grid(1e-3, 1.5, 600);
        const double exact_diff = limits::wavefunction_peak_difference(
            0, 1, cfg.model(), grid, /*small_angle=*/false, cfg.figure_s());
        const double gauss_diff = limits::wavefunction_peak_difference(
            0, 1, cfg.model(), grid, /*small_angle=*/true, cfg.figure_s());
        std::ostringstream note;
        note << "unit-peak max difference: exact form " << format_double(exact_diff)
             << ", small-angle form " << format_double(gauss_diff)
             << "; the figure coincidence requires the small-angle form";
        c.documented("fig1_exact_form_deviation", "findings", exact_diff, note.str());
    }

    // fig2: both curves start at 1, stay positive and decrease on [0, 1] GeV
    {
        const auto ds = figures::make_fig2(cfg);
        bool ok = std::abs(ds.rows[0][1] - 1.0) < 1e-10 && std::abs(ds.rows[0][2] - 1.0) < 1e-10;
        double prev1 = ds.rows[0][1], prev2 = ds.rows[0][2];
        for (std::size_t i = 1; i < ds.rows.size() && ds.rows[i][0] <= 1.0 + 1e-12; ++i) {
            ok = ok && ds.rows[i][1] > 0.0 && ds.rows[i][2] > 0.0 && ds.rows[i][1] < prev1 &&
                 ds.rows[i][2] < prev2;
            prev1 = ds.rows[i][1];
            prev2 = ds.rows[i][2];
        }
        c.exact("fig2_start_positive_decreasing", "cli", ok, ok ? 0.0 : 1.0);
    }

    // fig3: both Q^4 G columns increase on (0, 0.5] GeV
    {
        const auto ds = figures::make_fig3(cfg);
        bool ok = true;
        double prev1 = ds.rows[0][1], prev2 = ds.rows[0][2];
        for (std::size_t i = 1; i < ds.rows.size() && ds.rows[i][0] <= 0.5 + 1e-12; ++i) {
            ok = ok && ds.rows[i][1] > prev1 && ds.rows[i][2] > prev2;
            prev1 = ds.rows[i][1];
            prev2 = ds.rows[i][2];
        }
        c.exact("fig3_q4_increase_near_origin", "cli", ok, ok ? 0.0 : 1.0);
    }

    // fig4: per-Q area agreement at Q = 0 (each family carries its own Q=0
    // normalization, so this measures quadrature/sampling consistency)
    {
        const auto ds = figures::make_fig4(cfg);
        auto area = [&](std::size_t col) {
            double acc = 0.0;
            for (std::size_t i = 0; i + 1 < ds.rows.size(); ++i)
                acc += 0.5 * (ds.rows[i + 1][0] - ds.rows[i][0]) *
                       (ds.rows[i][col] + ds.rows[i + 1][col]);
            return acc;
        };
        const double a_exact = area(1);   // integrand_exact_Q0
        const double a_approx = area(5);  // integrand_approx_Q0
        c.upper("fig4_area_difference_q0", "cli",
                std::abs(a_exact - a_approx) / std::abs(a_approx), 0.1);
    }

    // determinism: two renders are byte-identical
    {
        const auto a = figures::render(figures::make_fig2(cfg), cfg);
        const auto b = figures::render(figures::make_fig2(cfg), cfg);
        c.exact("figures_deterministic", "cli", a == b, a == b ? 0.0 : 1.0);
    }
}

void check_documented_findings(Collector& c, const RunConfig& cfg) {
    const ModelParams p = cfg.model();
    const double R = cfg.R_fm;

    // s from (kappa, R) vs the adopted 5/2
    {
        const double k2R2 = p.kappa2() * R * R;
        const double s_derived = std::sqrt(k2R2 * k2R2 + 0.25);
        c.in_range("parameter_consistency_s_derived", "findings", s_derived, 2.473, 2.483,
                   "sqrt(kappa^4 R^4 + 1/4) at the figure parameters");
        std::ostringstream note;
        note << "derived s = " << format_double(s_derived)
             << " differs from the adopted 5/2; both conventions are exposed";
        c.documented("s_vs_R_inconsistency", "findings", std::abs(s_derived - 2.5), note.str());
    }

    // closed form vs Hankel quadrature at the origin: exact factor 3/2
    {
        const double ratio = ff::ff_closed(0.0, R) / ff::ff_hankel(0.0, R, cfg.quad);
        c.in_range("ratio_closed_over_hankel_at_Q0", "findings", ratio, 1.5 - 1e-6, 1.5 + 1e-6,
                   "printed closed form carries 3/2 times the quadrature of its own integral");
    }

    // second-term exponent mismatch: > 5% divergence at QR = 4
    {
        const double q = 4.0 / R;
        const double a = ff::ff_closed(q, R);
        const double b = ff::ff_reference_closed(q, R);
        c.lower("closed_form_exponent_mismatch", "findings", std::abs(a - b) / std::abs(b), 0.05,
                "printed exp(-b^2/6) second term against the table-derived exp(-b^2/12)");
    }

    // shifted-Hamiltonian bookkeeping: H+ = bare - c_+, so the displayed
    // single-c potentials equal H+ + 2 c_+; the prose shift is consistent with
    // the displays only through that relation
    {
        const double k2 = p.kappa2();
        const double cplus = 2.0 * k2 * 2.0;  // nu = 1
        const double e_full = lfh::energy_sq(0, 1, p);
        const double e_susy = 0.0;  // ground state of A^+A
        const double residual = std::abs(e_full - (e_susy + 2.0 * cplus));
        std::ostringstream note;
        note << "E^2(0,1) = E_S^2 + 2 c_+ holds to " << format_double(residual)
             << " fm^-2; the displayed single-c potentials already contain one c_+ because the "
                "factorized operator carries -c_+";
        c.documented("shifted_hamiltonian_factor2_prose", "findings", residual, note.str());
    }

    // printed polynomial parameter of the bound-state series fails the radial
    // equation for n >= 1; the corrected family passes (measured residuals)
    {
        const auto cc = hy::make_ptii_config(1, p, 10.6);
        const auto grid = uniform_grid(0.15, 5.0, 2048);
        auto residual_of = [&](bool printed) {
            SampledWavefunction u;
            u.grid = grid;
            for (double rho : grid)
                u.values.push_back(printed ? hy::ptii_wavefunction_value_as_printed(
                                                 1, cc, rho, hy::WaveForm::Schrodinger)
                                           : hy::ptii_wavefunction_value(
                                                 1, cc, rho, hy::WaveForm::Schrodinger));
            auto V = [&](double rho) { return hy::ptii_potential(rho, cc) * p.R * p.R; };
            const double e_scaled = hy::ptii_energy(1, cc).eps_higgs * p.R * p.R;
            return limits::schrodinger_residual(V, e_scaled, u) / std::abs(e_scaled);
        };
        const double res_printed = residual_of(true);
        const double res_corrected = residual_of(false);
        std::ostringstream note;
        note << "n=1 equation residual: printed parameter " << format_double(res_printed)
             << ", corrected parameter " << format_double(res_corrected)
             << "; implementation uses 2F1(-n, n+m+1-s; m+1; -sinh^2)";
        c.documented("bound_state_series_parameter", "findings", res_printed, note.str());
    }

    // power form vs exponential rewriting of the plane waves (approximate only)
    {
        const double rel = std::abs(ff::shapiro(0.5, 0.0, 2.0, R) -
                                    ff::shapiro_exponential_form(0.5, 0.0, 2.0, R)) /
                           std::abs(ff::shapiro(0.5, 0.0, 2.0, R));
        std::ostringstream note;
        note << "relative difference " << format_double(rel)
             << " at rho=0.5, phi=0: the exponential rewriting is leading-order only";
        c.documented("shapiro_exponential_rewriting", "findings", rel, note.str());
    }
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Documented: return "DOCUMENTED";
    }
    return "?";
}

bool CheckReport::all_ok() const {
    for (const auto& r : results)
        if (r.status == Status::Fail) return false;
    return true;
}

int CheckReport::exit_code() const {
    if (quadrature_failure) return 2;
    return all_ok() ? 0 : 3;
}

CheckReport run_all_checks(const RunConfig& cfg) {
    validate(cfg);
    Collector c;
    try {
        check_specfun(c);
        check_lfh(c, cfg);
        check_hyperbolic(c, cfg);
        check_limits(c, cfg);
        check_formfactor(c, cfg);
        check_rosenmorse(c, cfg);
        check_figures(c, cfg);
        check_documented_findings(c, cfg);
    } catch (const QuadratureError& e) {
        c.report.quadrature_failure = true;
        c.report.results.push_back({"quadrature_convergence", "formfactor", Status::Fail, 0.0, 0.0,
                                    "", std::string("quadrature did not converge: ") + e.what()});
    }
    return c.report;
}

std::string report_json(const CheckReport& rep, const RunConfig& cfg) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json config;
    for (const auto& [k, v] : cfg.canonical_entries()) config[k] = v;
    j["config"] = config;
    j["config_hash"] = cfg.hash();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rep.results) {
        nlohmann::ordered_json e;
        e["id"] = r.id;
        e["module"] = r.module;
        e["status"] = status_name(r.status);
        e["measured"] = r.measured;
        if (r.status != Status::Documented) {
            e["threshold"] = r.threshold;
            e["comparison"] = r.comparison;
        }
        if (!r.note.empty()) e["note"] = r.note;
        arr.push_back(e);
    }
    j["checks"] = arr;
    j["counts"] = {{"total", rep.results.size()}};
    std::size_t pass = 0, fail = 0, doc = 0;
    for (const auto& r : rep.results) {
        if (r.status == Status::Pass) ++pass;
        else if (r.status == Status::Fail) ++fail;
        else ++doc;
    }
    j["counts"]["pass"] = pass;
    j["counts"]["fail"] = fail;
    j["counts"]["documented"] = doc;
    j["exit_code"] = rep.exit_code();
    return j.dump(2) + "\n";
}

std::string report_text(const CheckReport& rep) {
    std::ostringstream out;
    for (const auto& r : rep.results) {
        out << "[" << status_name(r.status) << "] " << r.module << "/" << r.id
            << "  measured=" << format_double(r.measured);
        if (r.status != Status::Documented && r.comparison == "<")
            out << " threshold<" << format_double(r.threshold);
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace curvedspec::checks
