#include <clocale>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "curvedspec/checks.hpp"
#include "curvedspec/dataset.hpp"
#include "curvedspec/figures.hpp"
#include "curvedspec/queries.hpp"
#include "curvedspec/runconfig.hpp"

namespace {

using namespace curvedspec;

// exit codes: 0 ok, 1 argument error, 2 numerical non-convergence,
// 3 invariant failure

RunConfig resolve_config(const std::optional<std::string>& config_path, bool figure_mode) {
    RunConfig cfg;
    std::optional<std::string> path = config_path;
    if (!path) {
        if (const char* env = std::getenv("CURVEDSPEC_CONFIG")) path = std::string(env);
    }
    if (path) cfg = load_config_file(*path, cfg);
    if (figure_mode && !cfg.s_override) cfg.s_override = 2.5;
    return cfg;
}

void emit(const Dataset& ds, const RunConfig& cfg, const std::optional<std::string>& out_path) {
    const std::string text = cfg.output_format == OutputFormat::Csv ? to_csv(ds) : to_json(ds);
    if (out_path) write_file(*out_path, text);
    else std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_NUMERIC, "C");
    CLI::App app{"curvedspec: flat and hyperbolic oscillator spectra, wavefunctions and "
                 "electric form factors, with a built-in conformance suite"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    app.add_option("--config", config_path, "JSON config file (flat key-value)");

    std::string format_flag;
    app.add_option("--format", format_flag, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // figures
    auto* fig = app.add_subcommand("figures", "emit a figure dataset");
    std::string fig_id;
    fig->add_option("id", fig_id, "figure id")->required()->check(
        CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
    std::optional<std::string> fig_out;
    fig->add_option("--out", fig_out, "output path (stdout when omitted)");

    // check
    auto* chk = app.add_subcommand("check", "run the conformance and invariant suite");
    std::optional<std::string> chk_out;
    chk->add_option("--out", chk_out, "write the JSON report to this path");
    bool chk_quiet = false;
    chk->add_flag("--quiet", chk_quiet, "suppress the per-check text lines");

    // query
    auto* qry = app.add_subcommand("query", "tabulate spectra, wavefunctions, form factors, limits");
    std::string kind;
    qry->add_option("kind", kind, "spectrum|wavefunction|formfactor|limits")
        ->required()
        ->check(CLI::IsMember({"spectrum", "wavefunction", "formfactor", "limits"}));
    std::string model = "lfh";
    qry->add_option("--model", model, "spectrum/wavefunction model: lfh|ptii|eckart|rmt");
    int n_max = 3;
    qry->add_option("--n-max", n_max, "largest radial number");
    int n = 0;
    qry->add_option("--n", n, "radial number");
    int m = 1;
    qry->add_option("--m,--nu", m, "angular number (nu)");
    std::string variant = "plus";
    qry->add_option("--branch,--form", variant,
                    "lfh branch plus|minus or ptii form schrodinger|surface");
    double r_max = 3.0;
    qry->add_option("--r-max", r_max, "wavefunction grid extent (fm for lfh, rho for ptii)");
    int points = 512;
    qry->add_option("--points", points, "wavefunction grid points");
    std::string method = "all";
    qry->add_option("--method", method, "formfactor method or 'all'");
    std::optional<double> q_gev;
    qry->add_option("--Q", q_gev, "single momentum transfer in GeV (grid when omitted)");
    double R_start = 10.0;
    qry->add_option("--R-start", R_start, "limits: first radius (fm)");
    int R_count = 4;
    qry->add_option("--R-count", R_count, "limits: number of doublings");
    std::optional<std::string> qry_out;
    qry->add_option("--out", qry_out, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        const bool figure_mode = fig->parsed();
        RunConfig cfg = resolve_config(config_path, figure_mode);
        if (!format_flag.empty())
            cfg.output_format = format_flag == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        validate(cfg);

        if (fig->parsed()) {
            emit(figures::make_figure(fig_id, cfg), cfg, fig_out);
            return 0;
        }
        if (chk->parsed()) {
            const auto rep = checks::run_all_checks(cfg);
            if (!chk_quiet) std::cout << checks::report_text(rep);
            const std::string json = checks::report_json(rep, cfg);
            if (chk_out) write_file(*chk_out, json);
            else if (chk_quiet) std::cout << json;
            std::size_t fails = 0;
            for (const auto& r : rep.results)
                if (r.status == checks::Status::Fail) ++fails;
            std::cout << (fails == 0 ? "all checks passed (" : "CHECK FAILURES (")
                      << rep.results.size() << " checks, " << fails << " failed)\n";
            return rep.exit_code();
        }
        if (qry->parsed()) {
            Dataset ds;
            if (kind == "spectrum") ds = queries::spectrum(model, n_max, m, cfg);
            else if (kind == "wavefunction")
                ds = queries::wavefunction(model, n, m, variant, r_max, points, cfg);
            else if (kind == "formfactor") ds = queries::formfactor_rows(method, q_gev, cfg);
            else ds = queries::limits_report(n, m, R_start, R_count, cfg);
            emit(ds, cfg, qry_out);
            return 0;
        }
    } catch (const QuadratureError& e) {
        std::cerr << "error (non-convergence): " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "error (non-convergence): " << e.what() << "\n";
        return 2;
    } catch (const UnboundStateError& e) {
        std::cerr << "error (precondition): " << e.what() << "\n";
        return 1;
    } catch (const GridError& e) {
        std::cerr << "error (precondition): " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error (precondition): " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (arguments): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
