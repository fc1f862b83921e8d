#pragma once

#include "dct3mg/symbol.hpp"

#include <Eigen/Dense>

#include <vector>

namespace dct3mg {

// Level operator C_m(f): symmetric banded Toeplitz-plus-Hankel matrix of
// bandwidth 2k+1 for a degree-k symbol, plus the rank-one mass term
// mass * e e^T / m. Entries (0-indexed):
//   C[i,l] = a_|i-l| + a_{i+l+1} + a_{2m-i-l-1},  a_0 = c_0, a_j = c_j / 2.
class Dct3Operator {
public:
    static Dct3Operator from_symbol(int m, Symbol sym);

    int size() const { return m_; }
    const Symbol& symbol() const { return sym_; }

    void matvec(const double* v, double* y) const;
    std::vector<double> matvec(const std::vector<double>& v) const;
    // Oracle path through the dense eigenvector transform.
    std::vector<double> matvec_spectral(const std::vector<double>& v) const;

    // lambda_j = f(x_j) + mass * [j == 0], in grid order.
    std::vector<double> eigenvalues() const;
    Eigen::MatrixXd materialize_dense(int cap = 4096) const;

private:
    int m_ = 0;
    Symbol sym_;
    std::vector<double> a_;
};

// Separable bivariate operator sum_k C(g_k) (x) C(h_k) acting on row-major
// m x m grids (x index major).
class Dct3Operator2D {
public:
    static Dct3Operator2D from_symbol(int m, TensorSymbol sym);

    int size() const { return m_; }       // per dimension
    int unknowns() const { return m_ * m_; }
    const TensorSymbol& symbol() const { return sym_; }

    void matvec(const double* v, double* y) const;
    std::vector<double> matvec(const std::vector<double>& v) const;
    std::vector<double> matvec_spectral(const std::vector<double>& v) const;

    std::vector<double> eigenvalues() const; // row-major grid order
    Eigen::MatrixXd materialize_dense(int cap = 64) const;

private:
    int m_ = 0;
    TensorSymbol sym_;
    struct TermOps {
        Dct3Operator gx, hy;
    };
    std::vector<TermOps> ops_;
    mutable std::vector<double> scratch_; // two m*m panes
};

// Dense oracle for grid symbols: sum over monomials of
// kron(C(cos j1 x), C(cos j2 y)) plus the corner mass. Test-scale only.
Eigen::MatrixXd materialize_dense_grid(int m, const Symbol2& sym, int cap = 64);

} // namespace dct3mg
