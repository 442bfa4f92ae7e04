#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "curvedspec/types.hpp"

namespace curvedspec::lfh {

enum class Branch { Plus, Minus };
enum class Ladder { A, Adag, B, Bdag };

// Oscillator-plus-barrier potential of the two coupled radial equations,
// including the additive constants c_+ = 2 kappa^2 (nu+1), c_- = 2 kappa^2 nu.
double potential(Branch branch, double zeta, int nu, const ModelParams& p);

// Squared energy 4 kappa^2 (n + nu + 1) in fm^-2.
double energy_sq(int n, int nu, const ModelParams& p);

// Closed-form eigenfunction value (unnormalized, positive at small zeta):
//   plus:  (k^2 z^2)^{nu/2+1/4} exp(-k^2 z^2/2) L_n^nu(k^2 z^2)
//   minus: (k^2 z^2)^{(nu+1)/2+1/4} exp(-k^2 z^2/2) L_n^{nu+1}(k^2 z^2)
double wavefunction_value(Branch branch, int n, int nu, const ModelParams& p, double zeta);

// Analytic L2(d zeta) normalization constant on (0, inf).
double wavefunction_norm_constant(Branch branch, int n, int nu, const ModelParams& p);

// Sampled eigenfunction, trapezoid-normalized on the given grid.
SampledWavefunction wavefunction(Branch branch, int n, int nu, const ModelParams& p,
                                 const std::vector<double>& grid);

// W_nu(zeta) = -(nu+1/2)/zeta + kappa^2 zeta.
double superpotential(double zeta, int nu, const ModelParams& p);

// Apply a ladder operator to a sampled function using 5-point finite
// differences (one-sided at the ends). The grid must be uniform with >= 5
// points.
//   A    =  d/dz + W_nu          Adag = -d/dz + W_nu
//   B    =  d/dz - (nu+1/2)/z - kappa^2 z
//   Bdag = -d/dz - (nu+1/2)/z - kappa^2 z
SampledWavefunction apply_ladder(Ladder which, const SampledWavefunction& f, int nu,
                                 const ModelParams& p);

struct SusyReport {
    std::vector<double> eig_plus;        // discretized A^+A spectrum
    std::vector<double> eig_minus;       // discretized AA^+ spectrum
    std::vector<double> expected_plus;   // 4 kappa^2 n
    std::vector<double> expected_minus;  // 4 kappa^2 (n+1)
    double ground_state_abs_error = 0.0;
    double partner_rel_error = 0.0;      // H+ level n=1 vs H- level n=0
    double max_rel_error = 0.0;          // over the excited levels of both towers
    double nilpotency_residual = 0.0;    // ||Q^2 psi|| on sampled doublets
    double anticommutator_rel_error = 0.0;
    bool pass = false;
};

// Discretizes H+ = A^+A and H- = AA^+ (Dirichlet, left end one step off the
// origin), diagonalizes both towers and exercises the supercharge algebra on
// sampled doublets. grid_size must be >= 1024.
SusyReport susy_spectrum_check(int n_max, int nu, const ModelParams& p, std::size_t grid_size);

struct ConformalReport {
    double commutator_jpjm_rel_error = 0.0;   // [J+,J-] f vs -2 D0 f
    double commutator_d0jp_rel_error = 0.0;   // [D0,J+] f vs -J+ f
    double commutator_d0jm_rel_error = 0.0;   // [D0,J-] f vs +J- f
    double hamiltonian_rel_error = 0.0;       // 2(J+ + k^4 J-) f vs (E^2 - c_+) f
};

// Verifies the so(2,1) relations by finite-difference application on the
// sampled eigenstates (n, nu) listed in states.
ConformalReport conformal_commutator_check(const ModelParams& p,
                                           const std::vector<std::pair<int, int>>& states,
                                           std::size_t grid_size = 4096);

}  // namespace curvedspec::lfh
