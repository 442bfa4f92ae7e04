#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvedspec/checks.hpp"
#include "curvedspec/formfactor.hpp"
#include "curvedspec/hyperbolic.hpp"
#include "curvedspec/lfh.hpp"
#include "curvedspec/limits.hpp"
#include "curvedspec/quadrature.hpp"
#include "curvedspec/rosenmorse.hpp"
#include "curvedspec/runconfig.hpp"
#include "curvedspec/specfun.hpp"

namespace py = pybind11;
using namespace curvedspec;

namespace {

lfh::Branch parse_branch(const std::string& s) {
    if (s == "plus") return lfh::Branch::Plus;
    if (s == "minus") return lfh::Branch::Minus;
    throw std::invalid_argument("branch must be 'plus' or 'minus'");
}

hyperbolic::WaveForm parse_form(const std::string& s) {
    if (s == "schrodinger") return hyperbolic::WaveForm::Schrodinger;
    if (s == "surface") return hyperbolic::WaveForm::Surface;
    throw std::invalid_argument("form must be 'schrodinger' or 'surface'");
}

}  // namespace

PYBIND11_MODULE(_curvedspec, mod) {
    mod.doc() = "flat and hyperbolic oscillator spectra, wavefunctions and electric form factors";

    py::register_exception<UnboundStateError>(mod, "UnboundStateError", PyExc_ValueError);
    py::register_exception<QuadratureError>(mod, "QuadratureError", PyExc_RuntimeError);
    py::register_exception<GridError>(mod, "GridError", PyExc_ValueError);

    py::class_<ModelParams>(mod, "ModelParams")
        .def(py::init<double, double>(), py::arg("kappa") = 2.14, py::arg("R") = 0.728)
        .def_readwrite("kappa", &ModelParams::kappa)
        .def_readwrite("R", &ModelParams::R)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(kappa=" + std::to_string(p.kappa) + ", R=" + std::to_string(p.R) + ")";
        });

    py::class_<QuadratureSpec>(mod, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
        .def_readwrite("abs_tol", &QuadratureSpec::abs_tol)
        .def_readwrite("max_subdivisions", &QuadratureSpec::max_subdivisions)
        .def_readwrite("rho_max", &QuadratureSpec::rho_max);

    // special functions
    auto sf = mod.def_submodule("specfun");
    sf.def("laguerre", &specfun::laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"));
    sf.def("hyp1f1", &specfun::hyp1f1_terminating, py::arg("n"), py::arg("c"), py::arg("x"),
           "terminating 1F1(-n; c; x)");
    sf.def("hyp2f1", &specfun::hyp2f1_terminating, py::arg("n"), py::arg("b"), py::arg("c"),
           py::arg("x"), "terminating 2F1(-n, b; c; x)");
    sf.def("jacobi", &specfun::jacobi, py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("x"));
    sf.def("assoc_legendre_hyp", &specfun::assoc_legendre_hyp, py::arg("l"), py::arg("m"),
           py::arg("z"));
    sf.def("bessel_j0", &specfun::bessel_j0, py::arg("x"));
    sf.def("bessel_i0", &specfun::bessel_i0, py::arg("x"));
    sf.def("bessel_i1", &specfun::bessel_i1, py::arg("x"));

    // flat oscillator
    auto fl = mod.def_submodule("lfh");
    fl.def("potential",
           [](const std::string& branch, double zeta, int nu, const ModelParams& p) {
               return lfh::potential(parse_branch(branch), zeta, nu, p);
           },
           py::arg("branch"), py::arg("zeta"), py::arg("nu"), py::arg("params"));
    fl.def("energy_sq", &lfh::energy_sq, py::arg("n"), py::arg("nu"), py::arg("params"));
    fl.def("superpotential", &lfh::superpotential, py::arg("zeta"), py::arg("nu"), py::arg("params"));
    fl.def("wavefunction",
           [](const std::string& branch, int n, int nu, const ModelParams& p,
              const std::vector<double>& grid) {
               const auto f = lfh::wavefunction(parse_branch(branch), n, nu, p, grid);
               return py::make_tuple(f.grid, f.values);
           },
           py::arg("branch"), py::arg("n"), py::arg("nu"), py::arg("params"), py::arg("grid"),
           "returns (grid, values), unit L2(d zeta) norm on the grid");

    // hyperbolic side
    py::class_<hyperbolic::PTIIConfig>(mod, "PTIIConfig")
        .def_readonly("a", &hyperbolic::PTIIConfig::a)
        .def_readonly("lambda_", &hyperbolic::PTIIConfig::lambda)
        .def_readonly("s", &hyperbolic::PTIIConfig::s)
        .def_readonly("m", &hyperbolic::PTIIConfig::m)
        .def_readonly("s_overridden", &hyperbolic::PTIIConfig::s_overridden);

    auto hy = mod.def_submodule("hyperbolic");
    hy.def("make_ptii_config",
           [](int m, const ModelParams& p, std::optional<double> s_override) {
               return hyperbolic::make_ptii_config(m, p, s_override);
           },
           py::arg("m"), py::arg("params"), py::arg("s_override") = std::nullopt);
    hy.def("embed",
           [](double rho, double phi, double R) {
               const auto e = hyperbolic::embed(rho, phi, R);
               return py::make_tuple(e.x0, e.x1, e.x2);
           },
           py::arg("rho"), py::arg("phi"), py::arg("R"));
    hy.def("eckart_energy",
           [](int n, int m, double R) { return hyperbolic::eckart_solution(n, m, 1.0, R).energy; },
           py::arg("n"), py::arg("m"), py::arg("R"));
    hy.def("higgs_potential", &hyperbolic::higgs_potential, py::arg("rho"), py::arg("params"));
    hy.def("ptii_potential", &hyperbolic::ptii_potential, py::arg("rho"), py::arg("cfg"));
    hy.def("ptii_energy",
           [](int n, const hyperbolic::PTIIConfig& cfg) {
               const auto e = hyperbolic::ptii_energy(n, cfg);
               return py::make_tuple(e.eps_ptii, e.eps_higgs);
           },
           py::arg("n"), py::arg("cfg"), "returns (eps_ptii, eps_higgs) in fm^-2");
    hy.def("bound_state_count", &hyperbolic::bound_state_count, py::arg("cfg"));
    hy.def("ptii_wavefunction",
           [](int n, const hyperbolic::PTIIConfig& cfg, const std::vector<double>& grid,
              const std::string& form) {
               const auto f = hyperbolic::ptii_wavefunction(n, cfg, grid, parse_form(form));
               return py::make_tuple(f.grid, f.values);
           },
           py::arg("n"), py::arg("cfg"), py::arg("grid"), py::arg("form") = "schrodinger");

    // contraction limits
    auto lm = mod.def_submodule("limits");
    lm.def("energy_contraction_error", &limits::energy_contraction_error, py::arg("n"),
           py::arg("m"), py::arg("params"));
    lm.def("hypergeom_limit_error", &limits::hypergeom_limit_error, py::arg("n"), py::arg("m"),
           py::arg("s"), py::arg("rho_grid"));

    // form factors
    auto ffm = mod.def_submodule("formfactor");
    ffm.attr("HBAR_C_GEV_FM") = formfactor::kHbarC_GeV_fm;
    ffm.def("shapiro", &formfactor::shapiro, py::arg("rho"), py::arg("phi"), py::arg("p"),
            py::arg("R"));
    ffm.def("ff_exact",
            [](double Q, const hyperbolic::PTIIConfig& cfg, const QuadratureSpec& quad) {
                const auto r = formfactor::ff_exact(Q, cfg, quad);
                return py::make_tuple(r.G, r.imag_diag);
            },
            py::arg("Q"), py::arg("cfg"), py::arg("quad") = QuadratureSpec{},
            "returns (G, imag_diagnostic); Q in fm^-1");
    ffm.def("ff_hankel", &formfactor::ff_hankel, py::arg("Q"), py::arg("R"),
            py::arg("quad") = QuadratureSpec{});
    ffm.def("ff_closed", &formfactor::ff_closed, py::arg("Q"), py::arg("R"));
    ffm.def("ff_reference_closed", &formfactor::ff_reference_closed, py::arg("Q"), py::arg("R"));
    ffm.def("angular_reduction", &formfactor::angular_reduction, py::arg("x"),
            py::arg("quad") = QuadratureSpec{});

    // Rosen-Morse comparator
    py::class_<rosenmorse::RMParams>(mod, "RMParams")
        .def(py::init<double, double, int>(), py::arg("b") = 2.0, py::arg("d") = 1.0,
             py::arg("l") = 0)
        .def_readwrite("b", &rosenmorse::RMParams::b)
        .def_readwrite("d", &rosenmorse::RMParams::d)
        .def_readwrite("l", &rosenmorse::RMParams::l);

    auto rms = mod.def_submodule("rosenmorse");
    rms.def("potential", &rosenmorse::rmt_potential, py::arg("r"), py::arg("params"));
    rms.def("energy", &rosenmorse::rmt_energy, py::arg("n"), py::arg("l"), py::arg("params"));
    rms.def("formfactor", &rosenmorse::rmt_formfactor, py::arg("Q"), py::arg("params"));
    rms.def("cornell_coeffs",
            [](const rosenmorse::RMParams& p) {
                const auto [a, b, c] = rosenmorse::rmt_cornell_coeffs(p);
                return py::make_tuple(a, b, c);
            },
            py::arg("params"));

    // conformance suite
    mod.def("run_checks",
            []() {
                RunConfig cfg;
                const auto rep = checks::run_all_checks(cfg);
                py::list out;
                for (const auto& r : rep.results) {
                    py::dict d;
                    d["id"] = r.id;
                    d["module"] = r.module;
                    d["status"] = checks::status_name(r.status);
                    d["measured"] = r.measured;
                    d["threshold"] = r.threshold;
                    d["note"] = r.note;
                    out.append(d);
                }
                return out;
            },
            "run the full conformance suite at the default configuration");
}
