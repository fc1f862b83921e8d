#pragma once

#include "dct3mg/cos_poly.hpp"

#include <stdexcept>
#include <vector>

namespace dct3mg {

// Generating symbol: even polynomial plus an optional point mass at the zero
// frequency (rank-one correction). The mass is spectral only: it shifts the
// eigenvalue at grid frequency 0 and never enters pointwise evaluation.
struct Symbol {
    CosPoly poly;
    double mass = 0.0;

    Symbol() = default;
    Symbol(CosPoly p, double m = 0.0) : poly(std::move(p)), mass(m) {}
};

struct Symbol2 {
    CosPoly2 poly;
    double mass = 0.0; // at frequency (0,0)

    Symbol2() = default;
    Symbol2(CosPoly2 p, double m = 0.0) : poly(std::move(p)), mass(m) {}
};

// Separable bivariate symbol: sum of g_k(x) * h_k(y) terms. Each factor may
// carry its own point mass, which is how the rank-one corrections of a
// corrected projector propagate per axis through coarsening.
struct TensorTerm {
    Symbol x;
    Symbol y;
};

struct TensorSymbol {
    std::vector<TensorTerm> terms;
};

enum class ZeroLoc { zero, pi };

struct ZeroInfo {
    ZeroLoc location = ZeroLoc::zero;
    int order = 2;
};

class symbol_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline double eval(const Symbol& f, double x) { return eval(f.poly, x); }
inline double eval(const Symbol2& f, double x, double y) { return eval(f.poly, x, y); }
double eval(const TensorSymbol& f, double x, double y);

// Eigenvalue at a grid frequency: poly value plus mass when the frequency is 0.
double eigenvalue_at(const Symbol& f, double x);

// Coarse-symbol law: the result samples
//   fhat(y) = cos^2(y/4) (f p^2)(y/2) + cos^2((pi - y/2)/2) (f p^2)(pi - y/2)
// with point masses transported to the coarse zero frequency.
Symbol galerkin_symbol(const Symbol& f, const Symbol& p);
Symbol2 galerkin_symbol(const Symbol2& f, const Symbol2& p);
// Per-axis coarsening of a separable symbol by projector factors px, py;
// exactly equals the Kronecker-assembled Galerkin product per term.
TensorSymbol galerkin_symbol(const TensorSymbol& f, const Symbol& px, const Symbol& py);

// One step of the psi-recursion: even-harmonic extraction of (1+cos) p psi,
// scaled by 2^-q.
CosPoly psi_step(const CosPoly& psi, int q, const CosPoly& p);

// Zero tracking through one coarsening: 0 stays put, pi moves to 0 with the
// order raised by two.
ZeroInfo project_zero(const ZeroInfo& z);

// Projector symbol for a zero at z.location on a level of size m: vanishes at
// the mirror point pi - location with order 2r. For a zero at pi the
// polynomial part vanishes at the grid point 0, so it carries its own
// rank-one correction d = p(pi/m).
Symbol projector_poly(const ZeroInfo& z, int r, int m);

// Rank-one correction of a symbol vanishing at 0: mass c = f(pi/m).
Symbol strang_correct(const CosPoly& f, int m);

// Factor f.poly = (1 - cos x)^q psi(x) with psi positive; exact division in
// the t = cos x variable.
CosPoly extract_psi(const Symbol& f, int q);

// Max of |poly| over a dense sample of [0,pi]^d, then max with the
// mass-corrected eigenvalue at frequency 0.
double sup_norm(const Symbol& f);
double sup_norm(const Symbol2& f);
double sup_norm(const TensorSymbol& f);

bool is_nonnegative(const Symbol& f, double tol_rel = 1e-12);

// Grid view of a separable symbol for reporting: polynomial coefficient grid
// plus the corner mass lambda(0,0) - poly(0,0). Per-axis line masses (pi-case
// internals) are not representable here; `faithful` is false when present.
struct GridView {
    CosPoly2 poly;
    double corner_mass = 0.0;
    bool faithful = true;
};
GridView to_grid(const TensorSymbol& f);

} // namespace dct3mg
