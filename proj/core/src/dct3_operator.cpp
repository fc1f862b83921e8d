#include "dct3mg/dct3_operator.hpp"

#include "dct3mg/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dct3mg {

namespace {
constexpr double kPi = std::numbers::pi;
}

Dct3Operator Dct3Operator::from_symbol(int m, Symbol sym) {
    if (m < 2) throw std::invalid_argument("Dct3Operator: m must be >= 2");
    if (sym.poly.degree() >= m) throw std::invalid_argument("Dct3Operator: symbol degree must be < m");
    Dct3Operator op;
    op.m_ = m;
    op.a_.resize(sym.poly.c.size());
    if (!op.a_.empty()) {
        op.a_[0] = sym.poly.c[0];
        for (std::size_t t = 1; t < sym.poly.c.size(); ++t) op.a_[t] = 0.5 * sym.poly.c[t];
    }
    op.sym_ = std::move(sym);
    return op;
}

void Dct3Operator::matvec(const double* v, double* y) const {
    const int m = m_;
    const int k = static_cast<int>(a_.size()) - 1;
    const double a0 = a_.empty() ? 0.0 : a_[0];
    for (int i = 0; i < m; ++i) y[i] = a0 * v[i];
    for (int t = 1; t <= k; ++t) {
        const double at = a_[t];
        if (at == 0.0) continue;
        for (int i = t; i < m; ++i) y[i] += at * v[i - t];     // lower Toeplitz
        for (int i = 0; i + t < m; ++i) y[i] += at * v[i + t]; // upper Toeplitz
        for (int i = 0; i < t && t - 1 - i < m; ++i) y[i] += at * v[t - 1 - i];
        for (int i = std::max(0, m - t); i < m; ++i) y[i] += at * v[2 * m - 1 - t - i];
    }
    if (sym_.mass != 0.0) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += v[i];
        const double w = sym_.mass * s / m;
        for (int i = 0; i < m; ++i) y[i] += w;
    }
}

std::vector<double> Dct3Operator::matvec(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != m_) throw std::invalid_argument("matvec: size mismatch");
    std::vector<double> y(m_);
    matvec(v.data(), y.data());
    return y;
}

std::vector<double> Dct3Operator::matvec_spectral(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != m_) throw std::invalid_argument("matvec_spectral: size mismatch");
    Eigen::Map<const Eigen::VectorXd> vv(v.data(), m_);
    Eigen::VectorXd w = dct3_apply_transpose(m_, vv);
    const std::vector<double> lam = eigenvalues();
    for (int j = 0; j < m_; ++j) w[j] *= lam[j];
    Eigen::VectorXd r = dct3_apply(m_, w);
    return std::vector<double>(r.data(), r.data() + m_);
}

std::vector<double> Dct3Operator::eigenvalues() const {
    std::vector<double> lam(m_);
    for (int j = 0; j < m_; ++j) lam[j] = eval(sym_.poly, j * kPi / m_);
    lam[0] += sym_.mass;
    return lam;
}

Eigen::MatrixXd Dct3Operator::materialize_dense(int cap) const {
    if (m_ > cap) throw std::invalid_argument("materialize_dense: cap exceeded");
    Eigen::MatrixXd A(m_, m_);
    std::vector<double> e(m_, 0.0), col(m_);
    for (int l = 0; l < m_; ++l) {
        e[l] = 1.0;
        matvec(e.data(), col.data());
        for (int i = 0; i < m_; ++i) A(i, l) = col[i];
        e[l] = 0.0;
    }
    return A;
}

Dct3Operator2D Dct3Operator2D::from_symbol(int m, TensorSymbol sym) {
    Dct3Operator2D op;
    op.m_ = m;
    for (const TensorTerm& t : sym.terms)
        op.ops_.push_back({Dct3Operator::from_symbol(m, t.x), Dct3Operator::from_symbol(m, t.y)});
    op.sym_ = std::move(sym);
    op.scratch_.resize(2 * static_cast<std::size_t>(m) * m);
    return op;
}

void Dct3Operator2D::matvec(const double* v, double* y) const {
    const int m = m_;
    const std::size_t n = static_cast<std::size_t>(m) * m;
    double* W = scratch_.data();
    double* Wt = scratch_.data() + n;
    std::fill(y, y + n, 0.0);
    for (const TermOps& t : ops_) {
        // rows: apply C(h) along y for each fixed x index
        for (int i = 0; i < m; ++i) t.hy.matvec(v + static_cast<std::size_t>(i) * m, W + static_cast<std::size_t>(i) * m);
        // transpose, apply C(g) along x, accumulate transposed back
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) Wt[static_cast<std::size_t>(j) * m + i] = W[static_cast<std::size_t>(i) * m + j];
        for (int j = 0; j < m; ++j) t.gx.matvec(Wt + static_cast<std::size_t>(j) * m, W + static_cast<std::size_t>(j) * m);
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < m; ++i) y[static_cast<std::size_t>(i) * m + j] += W[static_cast<std::size_t>(j) * m + i];
    }
}

std::vector<double> Dct3Operator2D::matvec(const std::vector<double>& v) const {
    if (v.size() != static_cast<std::size_t>(m_) * m_) throw std::invalid_argument("matvec: size mismatch");
    std::vector<double> y(v.size());
    matvec(v.data(), y.data());
    return y;
}

std::vector<double> Dct3Operator2D::matvec_spectral(const std::vector<double>& v) const {
    const std::size_t n = static_cast<std::size_t>(m_) * m_;
    if (v.size() != n) throw std::invalid_argument("matvec_spectral: size mismatch");
    Eigen::Map<const Eigen::MatrixXd> V(v.data(), m_, m_); // column-major: V(j,i) = v[i*m+j]
    Eigen::MatrixXd C = tensor_apply_transpose(m_, m_, V.transpose());
    const std::vector<double> lam = eigenvalues();
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) C(i, j) *= lam[static_cast<std::size_t>(i) * m_ + j];
    Eigen::MatrixXd R = tensor_apply(m_, m_, C);
    std::vector<double> y(n);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) y[static_cast<std::size_t>(i) * m_ + j] = R(i, j);
    return y;
}

std::vector<double> Dct3Operator2D::eigenvalues() const {
    std::vector<double> lam(static_cast<std::size_t>(m_) * m_, 0.0);
    for (const TensorTerm& t : sym_.terms) {
        std::vector<double> lx(m_), ly(m_);
        for (int j = 0; j < m_; ++j) {
            lx[j] = eval(t.x.poly, j * kPi / m_);
            ly[j] = eval(t.y.poly, j * kPi / m_);
        }
        lx[0] += t.x.mass;
        ly[0] += t.y.mass;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) lam[static_cast<std::size_t>(i) * m_ + j] += lx[i] * ly[j];
    }
    return lam;
}

Eigen::MatrixXd Dct3Operator2D::materialize_dense(int cap) const {
    if (m_ > cap) throw std::invalid_argument("materialize_dense: cap exceeded");
    const int n = m_ * m_;
    Eigen::MatrixXd A(n, n);
    std::vector<double> e(n, 0.0), col(n);
    for (int l = 0; l < n; ++l) {
        e[l] = 1.0;
        matvec(e.data(), col.data());
        for (int i = 0; i < n; ++i) A(i, l) = col[i];
        e[l] = 0.0;
    }
    return A;
}

Eigen::MatrixXd materialize_dense_grid(int m, const Symbol2& sym, int cap) {
    if (m > cap) throw std::invalid_argument("materialize_dense_grid: cap exceeded");
    const int n = m * m;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int j1 = 0; j1 < sym.poly.nx; ++j1)
        for (int j2 = 0; j2 < sym.poly.ny; ++j2) {
            const double c = sym.poly.at(j1, j2);
            if (c == 0.0) continue;
            std::vector<double> cx(static_cast<std::size_t>(j1) + 1, 0.0), cy(static_cast<std::size_t>(j2) + 1, 0.0);
            cx[j1] = 1.0;
            cy[j2] = 1.0;
            const Eigen::MatrixXd Bx = Dct3Operator::from_symbol(m, Symbol(CosPoly(cx))).materialize_dense(cap);
            const Eigen::MatrixXd By = Dct3Operator::from_symbol(m, Symbol(CosPoly(cy))).materialize_dense(cap);
            for (int i1 = 0; i1 < m; ++i1)
                for (int l1 = 0; l1 < m; ++l1)
                    A.block(i1 * m, l1 * m, m, m) += (c * Bx(i1, l1)) * By;
        }
    if (sym.mass != 0.0) A += Eigen::MatrixXd::Constant(n, n, sym.mass / n);
    return A;
}

} // namespace dct3mg
