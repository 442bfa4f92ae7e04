#include "curvedspec/runconfig.hpp"

#include <cmath>

#include <json.hpp>

#include "curvedspec/dataset.hpp"

namespace curvedspec {

std::vector<double> QGrid::values_gev() const {
    if (!(step_gev > 0.0) || !(hi_gev >= lo_gev))
        throw std::domain_error("q_grid: need step > 0 and hi >= lo");
    std::vector<double> v;
    const auto n = static_cast<std::size_t>(std::floor((hi_gev - lo_gev) / step_gev + 0.5));
    v.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v.push_back(lo_gev + step_gev * static_cast<double>(i));
    return v;
}

void validate(const RunConfig& cfg) {
    validate(cfg.model());
    validate(cfg.quad);
    if (!(cfg.rm_b > 0.0) || !(cfg.rm_d_fm > 0.0))
        throw std::domain_error("RunConfig: rm_b and rm_d_fm must be > 0");
    if (cfg.s_override && !(*cfg.s_override > 0.5))
        throw std::domain_error("RunConfig: s_override must be > 1/2");
    if (cfg.q_grid.values_gev().empty()) throw std::domain_error("RunConfig: empty q_grid");
}

std::vector<std::pair<std::string, std::string>> RunConfig::canonical_entries() const {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("kappa_per_fm", format_double(kappa_per_fm));
    e.emplace_back("R_fm", format_double(R_fm));
    e.emplace_back("s_override", s_override ? format_double(*s_override) : "derived");
    e.emplace_back("rm_b", format_double(rm_b));
    e.emplace_back("rm_d_fm", format_double(rm_d_fm));
    e.emplace_back("quad_rel_tol", format_double(quad.rel_tol));
    e.emplace_back("quad_abs_tol", format_double(quad.abs_tol));
    e.emplace_back("quad_max_subdivisions", std::to_string(quad.max_subdivisions));
    e.emplace_back("quad_rho_max", format_double(quad.rho_max));
    e.emplace_back("format", output_format == OutputFormat::Csv ? "csv" : "json");
    e.emplace_back("q_grid_lo_gev", format_double(q_grid.lo_gev));
    e.emplace_back("q_grid_hi_gev", format_double(q_grid.hi_gev));
    e.emplace_back("q_grid_step_gev", format_double(q_grid.step_gev));
    return e;
}

std::string RunConfig::hash() const { return config_hash(canonical_entries()); }

RunConfig load_config_json(const std::string& text, RunConfig base) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "kappa_per_fm") base.kappa_per_fm = value.get<double>();
        else if (key == "R_fm") base.R_fm = value.get<double>();
        else if (key == "s_override") {
            if (value.is_null()) base.s_override.reset();
            else base.s_override = value.get<double>();
        } else if (key == "rm_b") base.rm_b = value.get<double>();
        else if (key == "rm_d_fm") base.rm_d_fm = value.get<double>();
        else if (key == "quad_rel_tol") base.quad.rel_tol = value.get<double>();
        else if (key == "quad_abs_tol") base.quad.abs_tol = value.get<double>();
        else if (key == "quad_max_subdivisions") base.quad.max_subdivisions = value.get<int>();
        else if (key == "quad_rho_max") base.quad.rho_max = value.get<double>();
        else if (key == "format") {
            const auto s = value.get<std::string>();
            if (s == "csv") base.output_format = OutputFormat::Csv;
            else if (s == "json") base.output_format = OutputFormat::Json;
            else throw std::invalid_argument("config: format must be csv or json");
        } else if (key == "q_grid_lo_gev") base.q_grid.lo_gev = value.get<double>();
        else if (key == "q_grid_hi_gev") base.q_grid.hi_gev = value.get<double>();
        else if (key == "q_grid_step_gev") base.q_grid.step_gev = value.get<double>();
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    return load_config_json(read_file(path), base);
}

}  // namespace curvedspec
