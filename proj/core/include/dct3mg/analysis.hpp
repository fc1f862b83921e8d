#pragma once

#include "dct3mg/solver.hpp"
#include "dct3mg/symbol.hpp"

#include <optional>
#include <vector>

namespace dct3mg {

struct SmoothingConstants {
    double alpha = 0.0; // pre-smoothing constant
    double beta = 0.0;  // post-smoothing constant
};

// Richardson smoothing constants for weight omega, 0 < omega <= 2/sup|f|:
// alpha = omega * min(2, (2 - omega*sup) / (1 - omega*sup)^2),
// beta  = omega * (2 - omega*sup).
SmoothingConstants smoothing_constants(const Symbol& f, double omega);

struct PsiStats {
    double M = 0.0;          // sup of psi
    double m = 0.0;          // inf of psi
    double mu_inf = 0.0;     // M / m
    double gamma_star = 0.0; // M / m^2
};

PsiStats psi_stats(const CosPoly& psi);

// gamma* = M_psi / m_psi^2 for psi = f / (1 - cos x)^q.
double approx_constant(const Symbol& f, int q);

struct LevelConstants {
    int m = 0;
    int q = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma_star = 0.0;
    double mu_inf = 0.0;
    double M_psi = 0.0;
    double m_psi = 0.0;
};

struct TheoryReport {
    std::vector<LevelConstants> levels; // one entry per level that coarsens
    double delta_pre = 0.0;
    double delta_post = 0.0;
    double bound = 0.0; // sqrt((1 - delta_post) / (1 + delta_pre))
    bool mu_increments_ok = true;
    std::optional<double> rho_hat;
};

// Per-level smoothing/approximation constants and the inf-min quantities.
// delta accounting is post-smoothing only unless include_pre is set. A level
// whose zero sits at pi is handled through the reflected symbol.
TheoryReport levelwise_delta(const Hierarchy1D& h, bool include_pre = false);

// A-norm of the dense one-cycle error propagator, via power iteration on the
// symmetrized form (relative tolerance 1e-8).
double measured_contraction(const Hierarchy1D& h, int level_cap = 256);
double measured_contraction(const Hierarchy2D& h, int level_cap = 32);

// Dense check that cutting maps the fine cosine basis onto the coarse one:
// T Q_m = Q_{m/2} [Phi | Theta Pi] with Phi_j = cos(x_j / 2), the permutation
// and signs resolved by matching columns. Returns the max absolute residual;
// throws if any fine column fails to align with a single coarse column.
double verify_cutting_identity(int m);

} // namespace dct3mg
