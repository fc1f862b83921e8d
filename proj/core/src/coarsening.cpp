#include "dct3mg/coarsening.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dct3mg {

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

void cut_into(const double* v, int m, double* w) {
    for (int i = 0; i < m / 2; ++i) w[i] = (v[2 * i] + v[2 * i + 1]) * kInvSqrt2;
}

void cut_transpose_into(const double* w, int m, double* v) {
    for (int i = 0; i < m / 2; ++i) {
        const double s = w[i] * kInvSqrt2;
        v[2 * i] = s;
        v[2 * i + 1] = s;
    }
}

std::vector<double> cut(const std::vector<double>& v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("cut: length must be even");
    std::vector<double> w(v.size() / 2);
    cut_into(v.data(), static_cast<int>(v.size()), w.data());
    return w;
}

std::vector<double> cut_transpose(const std::vector<double>& w) {
    std::vector<double> v(w.size() * 2);
    cut_transpose_into(w.data(), static_cast<int>(v.size()), v.data());
    return v;
}

Projector Projector::from_symbol(int m, Symbol p) {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("Projector: m must be even and >= 4");
    Projector P;
    P.m_ = m;
    P.Cp_ = Dct3Operator::from_symbol(m, p);
    P.p_ = std::move(p);

    const std::vector<double> lam = P.Cp_.eigenvalues();
    double scale = 0.0;
    for (double l : lam) scale = std::max(scale, std::abs(l));
    const double floor = 1e-13 * std::max(scale, 1.0);
    if (std::abs(lam[0]) <= floor) throw symbol_error("Projector: rank deficient at frequency 0");
    for (int j = 1; j < m / 2; ++j)
        if (std::abs(lam[j]) <= floor && std::abs(lam[m - j]) <= floor)
            throw symbol_error("Projector: rank deficient on a merged frequency pair");
    return P;
}

std::vector<double> Projector::restrict_vec(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != m_) throw std::invalid_argument("restrict: size mismatch");
    return cut(Cp_.matvec(v));
}

std::vector<double> Projector::prolong(const std::vector<double>& w) const {
    if (static_cast<int>(w.size()) != m_ / 2) throw std::invalid_argument("prolong: size mismatch");
    return Cp_.matvec(cut_transpose(w));
}

Projector2D Projector2D::from_symbols(int m, Symbol px, Symbol py) {
    Projector2D P;
    P.m_ = m;
    P.px_ = Projector::from_symbol(m, std::move(px));
    P.py_ = Projector::from_symbol(m, std::move(py));
    return P;
}

std::vector<double> Projector2D::restrict_vec(const std::vector<double>& v) const {
    const int m = m_, mc = m_ / 2;
    if (v.size() != static_cast<std::size_t>(m) * m) throw std::invalid_argument("restrict: size mismatch");
    std::vector<double> row(m), half(static_cast<std::size_t>(m) * mc);
    for (int i = 0; i < m; ++i) {
        std::copy(v.begin() + static_cast<std::size_t>(i) * m, v.begin() + static_cast<std::size_t>(i + 1) * m, row.begin());
        const std::vector<double> r = py_.restrict_vec(row);
        std::copy(r.begin(), r.end(), half.begin() + static_cast<std::size_t>(i) * mc);
    }
    std::vector<double> col(m), out(static_cast<std::size_t>(mc) * mc);
    for (int j = 0; j < mc; ++j) {
        for (int i = 0; i < m; ++i) col[i] = half[static_cast<std::size_t>(i) * mc + j];
        const std::vector<double> r = px_.restrict_vec(col);
        for (int i = 0; i < mc; ++i) out[static_cast<std::size_t>(i) * mc + j] = r[i];
    }
    return out;
}

std::vector<double> Projector2D::prolong(const std::vector<double>& w) const {
    const int m = m_, mc = m_ / 2;
    if (w.size() != static_cast<std::size_t>(mc) * mc) throw std::invalid_argument("prolong: size mismatch");
    std::vector<double> col(mc), half(static_cast<std::size_t>(m) * mc);
    for (int j = 0; j < mc; ++j) {
        for (int i = 0; i < mc; ++i) col[i] = w[static_cast<std::size_t>(i) * mc + j];
        const std::vector<double> r = px_.prolong(col);
        for (int i = 0; i < m; ++i) half[static_cast<std::size_t>(i) * mc + j] = r[i];
    }
    std::vector<double> rowc(mc), out(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        std::copy(half.begin() + static_cast<std::size_t>(i) * mc, half.begin() + static_cast<std::size_t>(i + 1) * mc, rowc.begin());
        const std::vector<double> r = py_.prolong(rowc);
        std::copy(r.begin(), r.end(), out.begin() + static_cast<std::size_t>(i) * m);
    }
    return out;
}

Dct3Operator coarse_operator(const Dct3Operator& A, const Projector& P) {
    if (A.size() != P.fine_size()) throw std::invalid_argument("coarse_operator: size mismatch");
    return Dct3Operator::from_symbol(P.coarse_size(), galerkin_symbol(A.symbol(), P.p()));
}

Dct3Operator2D coarse_operator(const Dct3Operator2D& A, const Projector2D& P) {
    if (A.size() != P.fine_size()) throw std::invalid_argument("coarse_operator: size mismatch");
    return Dct3Operator2D::from_symbol(P.coarse_size(), galerkin_symbol(A.symbol(), P.x().p(), P.y().p()));
}

} // namespace dct3mg
