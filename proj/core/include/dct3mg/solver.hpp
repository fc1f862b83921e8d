#pragma once

#include "dct3mg/coarsening.hpp"
#include "dct3mg/dct3_operator.hpp"
#include "dct3mg/symbol.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dct3mg {

enum class Method { tgm, vcycle };
enum class RhsMode { random_solution, ones_solution, zero };

struct SolveOptions {
    Method method = Method::vcycle;
    double tol = 1e-7;
    int max_iters = 1000;
    int nu_pre = 1;
    int nu_post = 1;
    RhsMode rhs = RhsMode::random_solution;
    std::uint64_t seed = 42;
};

struct SolveReport {
    int iterations = 0;
    bool converged = false;
    double final_relative_residual = 0.0;
    std::vector<double> residual_history;
    double elapsed_ms = 0.0;
};

struct Level1D {
    int m = 0;
    Symbol f;
    Dct3Operator A;
    std::optional<Projector> P; // absent at the coarsest level
    double omega_pre = 0.0;
    double omega_post = 0.0;
    ZeroInfo zero;
    int r = 0; // projector order used to leave this level (0 at coarsest)
};

struct Level2D {
    int m = 0;
    TensorSymbol f;
    Dct3Operator2D A;
    std::optional<Projector2D> P;
    double omega_pre = 0.0;
    double omega_post = 0.0;
    ZeroInfo zero; // per-axis zero (both axes identical by construction)
    int r = 0;
};

// Direct solve at the coarsest level: dense LDLT when the system is small,
// otherwise the exact transform-domain inverse (valid because every level
// operator stays inside the algebra).
class CoarseSolve1D {
public:
    static CoarseSolve1D build(const Dct3Operator& A, int dense_cap = 1024);
    std::vector<double> solve(const std::vector<double>& b) const;
    bool dense() const { return dense_; }

private:
    int m_ = 0;
    bool dense_ = false;
    Eigen::LDLT<Eigen::MatrixXd> ldlt_;
    std::vector<double> inv_lambda_;
};

class CoarseSolve2D {
public:
    static CoarseSolve2D build(const Dct3Operator2D& A, int dense_cap = 1024);
    std::vector<double> solve(const std::vector<double>& b) const;
    bool dense() const { return dense_; }

private:
    int m_ = 0;
    bool dense_ = false;
    Eigen::LDLT<Eigen::MatrixXd> ldlt_;
    std::vector<double> inv_lambda_;
};

struct Hierarchy1D {
    std::vector<Level1D> levels;
    CoarseSolve1D coarse;
    int unknowns() const { return levels.front().m; }
};

struct Hierarchy2D {
    std::vector<Level2D> levels;
    CoarseSolve2D coarse;
    int unknowns() const { return levels.front().m * levels.front().m; }
};

// Setup phase. The symbol recursion runs until m <= min_coarse per dimension
// for V-cycle hierarchies; a two-grid hierarchy always has exactly one
// coarsening step (its coarse grid is m0/2 by definition). Applies the rank
// correction at frequency zero when the declared zero sits at 0; validates
// nonnegativity, the declared zero order, and SPD-ness of every level.
Hierarchy1D build_hierarchy_1d(Symbol f0, ZeroInfo zero, std::optional<int> r, int m0,
                               Method method, int min_coarse = 16);
Hierarchy2D build_hierarchy_2d(TensorSymbol f0, ZeroInfo zero, std::optional<int> r, int m0,
                               Method method, int min_coarse = 16);

// Model problems: zero at 0 gives [2-2cos]^q per axis, zero at pi gives
// [2+2cos]^q per axis. 2D symbols are the two-axis sums; the 2D version of
// the rank correction is applied by build_hierarchy_2d.
Symbol problem_symbol_1d(ZeroLoc loc, int q);
TensorSymbol problem_symbol_2d(ZeroLoc loc, int q);

std::vector<double> richardson(const Dct3Operator& A, std::vector<double> x,
                               const std::vector<double>& b, double omega, int nu);
std::vector<double> richardson(const Dct3Operator2D& A, std::vector<double> x,
                               const std::vector<double>& b, double omega, int nu);

SolveReport tgm_solve(const Hierarchy1D& h, const std::vector<double>& b, const SolveOptions& opts);
SolveReport tgm_solve(const Hierarchy2D& h, const std::vector<double>& b, const SolveOptions& opts);
SolveReport vcycle_solve(const Hierarchy1D& h, const std::vector<double>& b, const SolveOptions& opts);
SolveReport vcycle_solve(const Hierarchy2D& h, const std::vector<double>& b, const SolveOptions& opts);

// One full multigrid cycle (or the direct solve on a single-level hierarchy),
// exposed for contraction measurements.
void apply_cycle(const Hierarchy1D& h, std::vector<double>& x, const std::vector<double>& b,
                 const SolveOptions& opts);
void apply_cycle(const Hierarchy2D& h, std::vector<double>& x, const std::vector<double>& b,
                 const SolveOptions& opts);

std::vector<double> make_rhs(const Hierarchy1D& h, RhsMode mode, std::uint64_t seed);
std::vector<double> make_rhs(const Hierarchy2D& h, RhsMode mode, std::uint64_t seed);

// Deterministic uniform [0,1) draws (64-bit Mersenne Twister, 53-bit mantissa).
std::vector<double> uniform_01(std::size_t n, std::uint64_t seed);

} // namespace dct3mg
