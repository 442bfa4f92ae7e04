#include "curvedspec/queries.hpp"

#include <cmath>

#include "curvedspec/formfactor.hpp"
#include "curvedspec/hyperbolic.hpp"
#include "curvedspec/lfh.hpp"
#include "curvedspec/limits.hpp"
#include "curvedspec/rosenmorse.hpp"

namespace curvedspec::queries {

namespace {

void add_provenance(Dataset& ds, const RunConfig& cfg, const std::string& what) {
    ds.add_meta("generator", "curvedspec");
    ds.add_meta("dataset", what);
    ds.add_meta("config_hash", cfg.hash());
    ds.add_meta("kappa_per_fm", format_double(cfg.kappa_per_fm));
    ds.add_meta("R_fm", format_double(cfg.R_fm));
    ds.add_meta("s_convention", cfg.s_override ? "override" : "derived");
    ds.add_meta("hbar_c_gev_fm", format_double(formfactor::kHbarC_GeV_fm));
}

hyperbolic::PTIIConfig query_ptii(int m, const RunConfig& cfg) {
    return hyperbolic::make_ptii_config(m, cfg.model(), cfg.s_override);
}

}  // namespace

Dataset spectrum(const std::string& model, int n_max, int m, const RunConfig& cfg) {
    validate(cfg);
    if (n_max < 0) throw std::invalid_argument("spectrum: n_max must be >= 0");
    if (m < 0) throw std::invalid_argument("spectrum: m (nu) must be >= 0");
    Dataset ds;
    add_provenance(ds, cfg, "spectrum");
    ds.label_column = "model";
    ds.columns = {"n", "m", "energy_sq_fm2"};
    const ModelParams p = cfg.model();
    if (model == "lfh") {
        for (int n = 0; n <= n_max; ++n) {
            ds.labels.push_back("lfh");
            ds.rows.push_back({double(n), double(m), lfh::energy_sq(n, m, p)});
        }
    } else if (model == "ptii") {
        const auto ptii = query_ptii(m, cfg);
        ds.add_meta("s_value", format_double(ptii.s));
        const int nb = hyperbolic::bound_state_count(ptii);
        for (int n = 0; n < nb && n <= n_max; ++n) {
            ds.labels.push_back("ptii");
            ds.rows.push_back({double(n), double(m), hyperbolic::ptii_energy(n, ptii).eps_higgs});
        }
        if (ds.rows.empty())
            throw UnboundStateError("spectrum: no bound state at this (s, m); bound-state count is " +
                                    std::to_string(nb));
    } else if (model == "eckart") {
        for (int n = 0; n <= n_max; ++n) {
            ds.labels.push_back("eckart");
            const int l = m + n;
            ds.rows.push_back({double(n), double(m), -double(l) * (l + 1.0) / (p.R * p.R)});
        }
    } else if (model == "rmt") {
        const auto rm = cfg.rm_params();
        for (int N = 1; N <= n_max + 1; ++N)
            for (int l = 0; l < N; ++l) {
                const int n = N - 1 - l;
                ds.labels.push_back("rmt");
                ds.rows.push_back({double(n), double(l), rosenmorse::rmt_energy(n, l, rm)});
            }
    } else {
        throw std::invalid_argument("spectrum: unknown model '" + model +
                                    "' (expected lfh|ptii|eckart|rmt)");
    }
    return ds;
}

Dataset wavefunction(const std::string& model, int n, int m, const std::string& variant,
                     double r_max, int points, const RunConfig& cfg) {
    validate(cfg);
    if (points < 2) throw std::invalid_argument("wavefunction: points must be >= 2");
    if (!(r_max > 0.0)) throw std::invalid_argument("wavefunction: r_max must be > 0");
    Dataset ds;
    add_provenance(ds, cfg, "wavefunction");
    const ModelParams p = cfg.model();
    const auto grid = uniform_grid(r_max / points, r_max, points);
    if (model == "lfh") {
        lfh::Branch branch;
        if (variant == "plus") branch = lfh::Branch::Plus;
        else if (variant == "minus") branch = lfh::Branch::Minus;
        else throw std::invalid_argument("wavefunction: lfh variant must be plus|minus");
        const auto f = lfh::wavefunction(branch, n, m, p, grid);
        ds.columns = {"zeta_fm", "psi"};
        ds.add_meta("measure", measure_name(f.measure));
        for (std::size_t i = 0; i < grid.size(); ++i) ds.rows.push_back({grid[i], f.values[i]});
    } else if (model == "ptii") {
        hyperbolic::WaveForm form;
        if (variant == "schrodinger") form = hyperbolic::WaveForm::Schrodinger;
        else if (variant == "surface") form = hyperbolic::WaveForm::Surface;
        else throw std::invalid_argument("wavefunction: ptii variant must be schrodinger|surface");
        const auto ptii = query_ptii(m, cfg);
        ds.add_meta("s_value", format_double(ptii.s));
        const auto f = hyperbolic::ptii_wavefunction(n, ptii, grid, form);
        ds.columns = {"rho", "psi"};
        ds.add_meta("measure", measure_name(f.measure));
        for (std::size_t i = 0; i < grid.size(); ++i) ds.rows.push_back({grid[i], f.values[i]});
    } else {
        throw std::invalid_argument("wavefunction: unknown model '" + model + "' (expected lfh|ptii)");
    }
    return ds;
}

Dataset formfactor_rows(const std::string& method, std::optional<double> q_gev,
                        const RunConfig& cfg) {
    validate(cfg);
    std::vector<std::string> methods;
    if (method == "all") methods = {"exact_fh", "hankel", "closed_form", "rosen_morse"};
    else if (method == "exact_fh" || method == "hankel" || method == "closed_form" ||
             method == "rosen_morse") methods = {method};
    else
        throw std::invalid_argument(
            "formfactor: unknown method '" + method +
            "' (expected all|exact_fh|hankel|closed_form|rosen_morse)");

    std::vector<double> q_values =
        q_gev ? std::vector<double>{*q_gev} : cfg.q_grid.values_gev();

    Dataset ds;
    add_provenance(ds, cfg, "formfactor");
    ds.add_meta("normalized", "false");
    ds.label_column = "method";
    ds.columns = {"Q_GeV", "Q_per_fm", "G", "imag_diag"};
    const auto ptii = hyperbolic::make_ptii_config(1, cfg.model(), cfg.figure_s());
    const auto rm = cfg.rm_params();
    for (const auto& meth : methods) {
        for (double qg : q_values) {
            const double q = qg / formfactor::kHbarC_GeV_fm;
            double g = 0.0, imag = 0.0;
            if (meth == "exact_fh") {
                const auto r = formfactor::ff_exact(q, ptii, cfg.quad);
                g = r.G;
                imag = r.imag_diag;
            } else if (meth == "hankel") {
                g = formfactor::ff_hankel(q, cfg.R_fm, cfg.quad);
            } else if (meth == "closed_form") {
                g = formfactor::ff_closed(q, cfg.R_fm);
            } else {
                g = rosenmorse::rmt_formfactor(q, rm);
            }
            ds.labels.push_back(meth);
            ds.rows.push_back({qg, q, g, imag});
        }
    }
    return ds;
}

Dataset limits_report(int n, int m, double R_start, int count, const RunConfig& cfg) {
    validate(cfg);
    if (count < 2) throw std::invalid_argument("limits: need at least 2 radii");
    if (!(R_start > 0.0)) throw std::invalid_argument("limits: R_start must be > 0");
    Dataset ds;
    add_provenance(ds, cfg, "limits");
    ds.columns = {"R_fm", "energy_error_fm2", "wavefunction_l2_error"};
    limits::ContractionReport rep;
    const auto zeta_grid = uniform_grid(1e-3, 3.0, 512);
    ModelParams p = cfg.model();
    for (int i = 0; i < count; ++i) {
        p.R = R_start * std::pow(2.0, i);
        rep.R_values.push_back(p.R);
        rep.energy_errors.push_back(limits::energy_contraction_error(n, m, p));
        rep.wavefunction_l2_errors.push_back(
            limits::wavefunction_contraction_error(n, m, p, zeta_grid));
    }
    rep.fitted_rate = limits::fit_rate(rep.R_values, rep.energy_errors);
    ds.add_meta("fitted_rate", format_double(rep.fitted_rate));
    for (std::size_t i = 0; i < rep.R_values.size(); ++i)
        ds.rows.push_back({rep.R_values[i], rep.energy_errors[i], rep.wavefunction_l2_errors[i]});
    return ds;
}

}  // namespace curvedspec::queries
