#pragma once

#include <string>

#include "curvedspec/dataset.hpp"
#include "curvedspec/runconfig.hpp"

namespace curvedspec::figures {

// zeta_fm, psi_lfh, psi_ptii on [0, 2] step 0.005, unit-peak normalized.
// psi_ptii is the small-hyperbolic-angle (gaussian) form of the ground state;
// the dataset header records this and the exact-form deviation is a separate
// conformance finding.
Dataset make_fig1(const RunConfig& cfg);

// Q_GeV, G_hyperbolic, G_rosen_morse, both normalized to 1 at the origin.
Dataset make_fig2(const RunConfig& cfg);

// Q_GeV, Q4G_hyperbolic, Q4G_rosen_morse from the normalized curves.
Dataset make_fig3(const RunConfig& cfg);

// rho plus eight value columns: exact and approximate transform integrands at
// Q = 0, 1, 2, 3 GeV, each family divided by its own Q = 0 area.
Dataset make_fig4(const RunConfig& cfg);

Dataset make_figure(const std::string& fig_id, const RunConfig& cfg);

// Serialized per cfg.output_format; used by the figures command and the
// determinism check.
std::string render(const Dataset& ds, const RunConfig& cfg);

}  // namespace curvedspec::figures
