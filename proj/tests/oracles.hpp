#pragma once

// Dense reference constructions for the tests. Everything here is assembled
// entry by entry from the defining formulas and deliberately avoids the
// library's banded kernels, cached transforms, and symbolic coarsening, so
// agreement between the two paths is meaningful.

#include "dct3mg/coarsening.hpp"
#include "dct3mg/dct3_operator.hpp"
#include "dct3mg/symbol.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace oracle {

inline double band_coeff(const dct3mg::CosPoly& c, int t) {
    if (t < 0 || t > c.degree()) return 0.0;
    return t == 0 ? c[0] : 0.5 * c[static_cast<std::size_t>(t)];
}

// C_m(f) from the closed-form entries
//   C[i,l] = a_|i-l| + a_{i+l+1} + a_{2m-i-l-1} + mass / m.
inline Eigen::MatrixXd dense_operator(int m, const dct3mg::Symbol& f) {
    Eigen::MatrixXd C(m, m);
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l)
            C(i, l) = band_coeff(f.poly, std::abs(i - l)) + band_coeff(f.poly, i + l + 1) +
                      band_coeff(f.poly, 2 * m - i - l - 1) + f.mass / m;
    return C;
}

// The eigenvector basis built directly from its formula.
inline Eigen::MatrixXd dense_basis(int m) {
    const double pi = std::acos(-1.0);
    Eigen::MatrixXd Q(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            Q(i, j) = std::sqrt((j == 0 ? 1.0 : 2.0) / m) * std::cos(j * (i + 0.5) * pi / m);
    return Q;
}

// Q diag(f(x_j) + mass [j==0]) Q^T.
inline Eigen::MatrixXd dense_spectral(int m, const dct3mg::Symbol& f) {
    const double pi = std::acos(-1.0);
    const Eigen::MatrixXd Q = dense_basis(m);
    Eigen::VectorXd lam(m);
    for (int j = 0; j < m; ++j) lam(j) = dct3mg::eval(f.poly, j * pi / m);
    lam(0) += f.mass;
    return Q * lam.asDiagonal() * Q.transpose();
}

inline Eigen::MatrixXd dense_cut(int m) {
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m / 2, m);
    const double w = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < m / 2; ++i) {
        T(i, 2 * i) = w;
        T(i, 2 * i + 1) = w;
    }
    return T;
}

inline Eigen::MatrixXd dense_projector(int m, const dct3mg::Symbol& p) {
    return dense_cut(m) * dense_operator(m, p);
}

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
    Eigen::MatrixXd K(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return K;
}

inline Eigen::MatrixXd dense_operator_2d(int m, const dct3mg::TensorSymbol& f) {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m * m, m * m);
    for (const auto& t : f.terms) C += kron(dense_operator(m, t.x), dense_operator(m, t.y));
    return C;
}

// Grid-symbol operator, one Kronecker product per monomial.
inline Eigen::MatrixXd dense_operator_grid(int m, const dct3mg::Symbol2& f) {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m * m, m * m);
    for (int j1 = 0; j1 < f.poly.nx; ++j1)
        for (int j2 = 0; j2 < f.poly.ny; ++j2) {
            const double c = f.poly.at(j1, j2);
            if (c == 0.0) continue;
            dct3mg::CosPoly gx, gy;
            gx.c.assign(static_cast<std::size_t>(j1) + 1, 0.0);
            gx.c[static_cast<std::size_t>(j1)] = 1.0;
            gy.c.assign(static_cast<std::size_t>(j2) + 1, 0.0);
            gy.c[static_cast<std::size_t>(j2)] = 1.0;
            C += c * kron(dense_operator(m, dct3mg::Symbol{gx}), dense_operator(m, dct3mg::Symbol{gy}));
        }
    C.array() += f.mass / (static_cast<double>(m) * m);
    return C;
}

// Degree-agnostic dense form of a tensor-sum symbol, one spectral factor per term.
inline Eigen::MatrixXd dense_spectral_2d(int m, const dct3mg::TensorSymbol& f) {
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(m * m, m * m);
    for (const auto& t : f.terms) C += kron(dense_spectral(m, t.x), dense_spectral(m, t.y));
    return C;
}

inline Eigen::MatrixXd dense_projector_2d(int m, const dct3mg::Symbol& px, const dct3mg::Symbol& py) {
    return kron(dense_projector(m, px), dense_projector(m, py));
}

inline Eigen::MatrixXd galerkin_dense(const Eigen::MatrixXd& P, const Eigen::MatrixXd& A) {
    return P * A * P.transpose();
}

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

inline double a_norm(const Eigen::MatrixXd& A, const Eigen::VectorXd& x) {
    return std::sqrt(std::max(0.0, x.dot(A * x)));
}

} // namespace oracle
