#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvedspec {

// Units: hbar = 1, 2*mu = 1. Lengths in fm, energies (squared masses) in fm^-2.
// The oscillator strength enters only through kappa^4 = mu^2 omega^2 / hbar^2.
struct ModelParams {
    double kappa = 2.14;  // fm^-1
    double R = 0.728;     // fm

    double kappa2() const { return kappa * kappa; }
    double kappa4() const { return kappa2() * kappa2(); }
};

inline void validate(const ModelParams& p) {
    if (!(p.kappa > 0.0)) throw std::domain_error("ModelParams: kappa must be > 0");
    if (!(p.R > 0.0)) throw std::domain_error("ModelParams: R must be > 0");
}

// Radial quantum numbers of the oscillator problem and the derived
// Poschl-Teller parameters (plus branch: a = m + 1/2).
struct QuantumNumbers {
    int n = 0;
    int m = 0;
    double a = 0.5;
    double s = 0.0;
    double lambda = 0.0;
};

inline QuantumNumbers make_quantum_numbers(int n, int m, const ModelParams& p) {
    if (n < 0 || m < 0) throw std::domain_error("quantum numbers must be non-negative");
    validate(p);
    QuantumNumbers q;
    q.n = n;
    q.m = m;
    q.a = m + 0.5;
    const double k2R2 = p.kappa2() * p.R * p.R;
    q.s = std::sqrt(k2R2 * k2R2 + 0.25);
    q.lambda = -0.5 - q.s;
    return q;
}

enum class Measure { FlatDzeta, HyperbolicDrho, HyperbolicSinhDrho };

inline std::string measure_name(Measure m) {
    switch (m) {
        case Measure::FlatDzeta: return "flat_dzeta";
        case Measure::HyperbolicDrho: return "hyperbolic_drho";
        case Measure::HyperbolicSinhDrho: return "hyperbolic_sinh_drho";
    }
    return "?";
}

struct SampledWavefunction {
    std::vector<double> grid;    // strictly increasing radial coordinates (fm)
    std::vector<double> values;
    Measure measure = Measure::FlatDzeta;
    bool normalized = false;
};

class GridError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class UnboundStateError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Quadrature failed to reach the requested tolerance within the subdivision
// budget. Maps to CLI exit code 2.
class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline void check_grid(const std::vector<double>& grid, std::size_t min_points = 2) {
    if (grid.size() < min_points)
        throw GridError("grid too small: need at least " + std::to_string(min_points) + " points");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1])) throw GridError("grid must be strictly increasing");
}

// Measure weight at a grid point, used for trapezoid normalization.
inline double measure_weight(Measure m, double r) {
    switch (m) {
        case Measure::FlatDzeta:
        case Measure::HyperbolicDrho: return 1.0;
        case Measure::HyperbolicSinhDrho: return std::sinh(r);
    }
    return 1.0;
}

// Trapezoid rule of f^2 * weight over the sampled grid.
double norm_squared(const SampledWavefunction& f);

// Scale values so the trapezoid norm is 1 and the leading nonzero value is positive.
void normalize_inplace(SampledWavefunction& f);

std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

}  // namespace curvedspec
