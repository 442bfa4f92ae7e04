#include "curvedspec/figures.hpp"

#include <cmath>

#include "curvedspec/formfactor.hpp"
#include "curvedspec/hyperbolic.hpp"
#include "curvedspec/lfh.hpp"
#include "curvedspec/limits.hpp"
#include "curvedspec/rosenmorse.hpp"
#include "curvedspec/specfun.hpp"

namespace curvedspec::figures {

namespace {

void add_provenance(Dataset& ds, const RunConfig& cfg, const std::string& fig_id) {
    ds.add_meta("generator", "curvedspec");
    ds.add_meta("dataset", fig_id);
    ds.add_meta("config_hash", cfg.hash());
    ds.add_meta("kappa_per_fm", format_double(cfg.kappa_per_fm));
    ds.add_meta("R_fm", format_double(cfg.R_fm));
    ds.add_meta("s_convention", cfg.s_override ? "override" : "figure_default_override");
    ds.add_meta("s_value", format_double(cfg.figure_s()));
    ds.add_meta("hbar_c_gev_fm", format_double(formfactor::kHbarC_GeV_fm));
}

hyperbolic::PTIIConfig figure_ptii(const RunConfig& cfg) {
    return hyperbolic::make_ptii_config(1, cfg.model(), cfg.figure_s());
}

}  // namespace

Dataset make_fig1(const RunConfig& cfg) {
    validate(cfg);
    const ModelParams p = cfg.model();
    const double s = cfg.figure_s();
    Dataset ds;
    add_provenance(ds, cfg, "fig1");
    ds.add_meta("normalization", "unit_peak");
    ds.add_meta("psi_lfh", "flat oscillator ground state, n=0 nu=1");
    ds.add_meta("psi_ptii", "hyperbolic ground state, small-angle form cosh->exp(rho^2/2)");
    ds.columns = {"zeta_fm", "psi_lfh", "psi_ptii"};
    const int npts = 401;  // [0, 2] step 0.005
    std::vector<double> lfh_vals(npts), ptii_vals(npts);
    for (int i = 0; i < npts; ++i) {
        const double zeta = 0.005 * i;
        const double rho = zeta / p.R;
        lfh_vals[i] = zeta == 0.0 ? 0.0 : lfh::wavefunction_value(lfh::Branch::Plus, 0, 1, p, zeta);
        ptii_vals[i] = std::pow(rho, 1.5) * std::exp(-0.5 * s * rho * rho);
    }
    auto unit_peak = [](std::vector<double>& v) {
        double pk = 0.0;
        for (double x : v) pk = std::max(pk, std::abs(x));
        for (double& x : v) x /= pk;
    };
    unit_peak(lfh_vals);
    unit_peak(ptii_vals);
    for (int i = 0; i < npts; ++i) ds.rows.push_back({0.005 * i, lfh_vals[i], ptii_vals[i]});
    return ds;
}

namespace {

struct HypCurve {
    std::vector<double> q_gev;
    std::vector<double> g_hyp;   // normalized printed closed form
    std::vector<double> g_rmt;   // normalized by construction
};

HypCurve normalized_curves(const RunConfig& cfg) {
    const auto q_gev = cfg.q_grid.values_gev();
    formfactor::FormFactorCurve hyp;
    hyp.method = formfactor::Method::ClosedForm;
    HypCurve out;
    const auto rm = cfg.rm_params();
    for (double qg : q_gev) {
        const double q_fm = qg / formfactor::kHbarC_GeV_fm;
        hyp.Q.push_back(q_fm);
        hyp.G.push_back(formfactor::ff_closed(q_fm, cfg.R_fm));
        out.g_rmt.push_back(rosenmorse::rmt_formfactor(q_fm, rm));
    }
    const auto hyp_n = formfactor::normalize_curve(hyp);
    out.q_gev = q_gev;
    out.g_hyp = hyp_n.G;
    return out;
}

}  // namespace

Dataset make_fig2(const RunConfig& cfg) {
    validate(cfg);
    if (std::abs(cfg.q_grid.lo_gev) > 1e-9)
        throw std::invalid_argument("fig2: q_grid must start at Q = 0 for normalization");
    Dataset ds;
    add_provenance(ds, cfg, "fig2");
    ds.add_meta("normalization", "G(0)=1 per curve");
    ds.add_meta("G_hyperbolic", "printed closed form of the hyperbolic transform");
    ds.add_meta("G_rosen_morse",
                "trigonometric Rosen-Morse comparator, b/d not fixed by published values");
    ds.add_meta("rm_b", format_double(cfg.rm_b));
    ds.add_meta("rm_d_fm", format_double(cfg.rm_d_fm));
    ds.columns = {"Q_GeV", "G_hyperbolic", "G_rosen_morse"};
    const auto c = normalized_curves(cfg);
    for (std::size_t i = 0; i < c.q_gev.size(); ++i)
        ds.rows.push_back({c.q_gev[i], c.g_hyp[i], c.g_rmt[i]});
    return ds;
}

Dataset make_fig3(const RunConfig& cfg) {
    validate(cfg);
    if (std::abs(cfg.q_grid.lo_gev) > 1e-9)
        throw std::invalid_argument("fig3: q_grid must start at Q = 0 for normalization");
    Dataset ds;
    add_provenance(ds, cfg, "fig3");
    ds.add_meta("normalization", "Q^4 (GeV^4) times the G(0)=1 curves");
    ds.add_meta("rm_b", format_double(cfg.rm_b));
    ds.add_meta("rm_d_fm", format_double(cfg.rm_d_fm));
    ds.columns = {"Q_GeV", "Q4G_hyperbolic", "Q4G_rosen_morse"};
    const auto c = normalized_curves(cfg);
    for (std::size_t i = 0; i < c.q_gev.size(); ++i) {
        const double q4 = std::pow(c.q_gev[i], 4);
        ds.rows.push_back({c.q_gev[i], q4 * c.g_hyp[i], q4 * c.g_rmt[i]});
    }
    return ds;
}

Dataset make_fig4(const RunConfig& cfg) {
    validate(cfg);
    const auto ptii = figure_ptii(cfg);
    const double R = cfg.R_fm;
    Dataset ds;
    add_provenance(ds, cfg, "fig4");
    ds.add_meta("normalization", "each family divided by its own Q=0 area");
    ds.add_meta("integrand_exact", "full azimuthal integral of the hyperbolic transform kernel");
    ds.add_meta("integrand_approx", "printed gaussian Hankel kernel");
    ds.columns = {"rho"};
    const double q_gev_list[4] = {0.0, 1.0, 2.0, 3.0};
    for (double q : q_gev_list)
        ds.columns.push_back("integrand_exact_Q" + std::to_string(static_cast<int>(q)));
    for (double q : q_gev_list)
        ds.columns.push_back("integrand_approx_Q" + std::to_string(static_cast<int>(q)));

    const double area_exact = formfactor::ff_exact(0.0, ptii, cfg.quad).G;
    const double area_approx = formfactor::ff_hankel(0.0, R, cfg.quad);

    const int npts = 601;
    const double step = cfg.quad.rho_max / (npts - 1);
    for (int i = 0; i < npts; ++i) {
        const double rho = step * i;
        std::vector<double> row{rho};
        for (double qg : q_gev_list) {
            const double q_fm = qg / formfactor::kHbarC_GeV_fm;
            row.push_back(formfactor::ff_exact_integrand(rho, q_fm, ptii, cfg.quad) / area_exact);
        }
        for (double qg : q_gev_list) {
            const double q_fm = qg / formfactor::kHbarC_GeV_fm;
            row.push_back(formfactor::ff_hankel_integrand(rho, q_fm, R) / area_approx);
        }
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

Dataset make_figure(const std::string& fig_id, const RunConfig& cfg) {
    if (fig_id == "fig1") return make_fig1(cfg);
    if (fig_id == "fig2") return make_fig2(cfg);
    if (fig_id == "fig3") return make_fig3(cfg);
    if (fig_id == "fig4") return make_fig4(cfg);
    throw std::invalid_argument("unknown figure id: " + fig_id);
}

std::string render(const Dataset& ds, const RunConfig& cfg) {
    return cfg.output_format == OutputFormat::Csv ? to_csv(ds) : to_json(ds);
}

}  // namespace curvedspec::figures
