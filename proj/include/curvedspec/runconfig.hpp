#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvedspec/quadrature.hpp"
#include "curvedspec/rosenmorse.hpp"
#include "curvedspec/types.hpp"

namespace curvedspec {

enum class OutputFormat { Csv, Json };

struct QGrid {
    double lo_gev = 0.0;
    double hi_gev = 3.0;
    double step_gev = 0.01;

    std::vector<double> values_gev() const;
};

// Figure-caption defaults: nu = 1, kappa = 2.14 fm^-1, R = 0.728 fm, |s| = 5/2.
// rm_b/rm_d are free comparator parameters, not fixed by any published value.
struct RunConfig {
    double kappa_per_fm = 2.14;
    double R_fm = 0.728;
    std::optional<double> s_override;  // figure mode uses 5/2
    double rm_b = 2.0;
    double rm_d_fm = 1.0;
    QuadratureSpec quad;
    OutputFormat output_format = OutputFormat::Csv;
    QGrid q_grid;

    ModelParams model() const { return {kappa_per_fm, R_fm}; }
    rosenmorse::RMParams rm_params() const { return {rm_b, rm_d_fm, 0}; }
    // s used for figure-style outputs: the override when present, else 5/2.
    double figure_s() const { return s_override ? *s_override : 2.5; }

    std::vector<std::pair<std::string, std::string>> canonical_entries() const;
    std::string hash() const;
};

void validate(const RunConfig& cfg);

// Flat key-value JSON; all keys optional, unknown keys rejected.
RunConfig load_config_json(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

}  // namespace curvedspec
