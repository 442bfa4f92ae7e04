#pragma once

#include <string>
#include <vector>

#include "curvedspec/dataset.hpp"
#include "curvedspec/runconfig.hpp"

namespace curvedspec::checks {

enum class Status { Pass, Fail, Documented };

std::string status_name(Status s);

struct CheckResult {
    std::string id;
    std::string module;
    Status status = Status::Fail;
    double measured = 0.0;
    double threshold = 0.0;
    std::string comparison;  // "<", ">", "in", "=="
    std::string note;
};

struct CheckReport {
    std::vector<CheckResult> results;
    bool quadrature_failure = false;

    bool all_ok() const;
    // 0 all PASS/DOCUMENTED, 2 quadrature non-convergence, 3 any FAIL.
    int exit_code() const;
};

// Runs every module's invariant suite plus the documented findings.
CheckReport run_all_checks(const RunConfig& cfg);

// Machine-readable report (JSON object with one entry per check).
std::string report_json(const CheckReport& rep, const RunConfig& cfg);

// One line per check, for terminals.
std::string report_text(const CheckReport& rep);

}  // namespace curvedspec::checks
