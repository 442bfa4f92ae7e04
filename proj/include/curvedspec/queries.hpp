#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvedspec/dataset.hpp"
#include "curvedspec/runconfig.hpp"

namespace curvedspec::queries {

// Rows (model, n, m, energy_sq_fm2). Models: lfh, ptii, eckart, rmt.
// For lfh/eckart n runs to n_max; for ptii every bound state of the configured
// well; for rmt all (n, l) with N = n+l+1 <= n_max+1.
Dataset spectrum(const std::string& model, int n_max, int m, const RunConfig& cfg);

// Sampled normalized wavefunction. model = lfh: branch in {plus, minus},
// grid in zeta; model = ptii: form in {schrodinger, surface}, grid in rho.
Dataset wavefunction(const std::string& model, int n, int m, const std::string& variant,
                     double r_max, int points, const RunConfig& cfg);

// Form-factor rows over the configured Q grid (or a single Q in GeV), with a
// method label per row. method = "all" emits every implemented transform.
Dataset formfactor_rows(const std::string& method, std::optional<double> q_gev,
                        const RunConfig& cfg);

// Contraction report rows over a geometric R sequence.
Dataset limits_report(int n, int m, double R_start, int count, const RunConfig& cfg);

}  // namespace curvedspec::queries
