#pragma once

#include "dct3mg/dct3_operator.hpp"
#include "dct3mg/symbol.hpp"

#include <vector>

namespace dct3mg {

// Pairwise averaging with weight 1/sqrt(2); rows are orthonormal, so
// cut(cut_transpose(w)) == w.
std::vector<double> cut(const std::vector<double>& v);
std::vector<double> cut_transpose(const std::vector<double>& w);

// In-place forms for allocation-free solver loops; m is the fine length.
void cut_into(const double* v, int m, double* w);
void cut_transpose_into(const double* w, int m, double* v);

// Restriction P = T C(p) from size m to m/2. The grid eigenvalues of C(p)
// must not vanish on both halves of any merged frequency pair, otherwise P
// drops rank and construction fails.
class Projector {
public:
    static Projector from_symbol(int m, Symbol p);

    int fine_size() const { return m_; }
    int coarse_size() const { return m_ / 2; }
    const Symbol& p() const { return p_; }
    const Dct3Operator& Cp() const { return Cp_; }

    std::vector<double> restrict_vec(const std::vector<double>& v) const;
    std::vector<double> prolong(const std::vector<double>& w) const;

private:
    int m_ = 0;
    Symbol p_;
    Dct3Operator Cp_;
};

// Tensor-product restriction (T C(px)) x (T C(py)) acting on m*m grids
// stored row-major with the x index major.
class Projector2D {
public:
    static Projector2D from_symbols(int m, Symbol px, Symbol py);

    int fine_size() const { return m_; }
    int coarse_size() const { return m_ / 2; }
    const Projector& x() const { return px_; }
    const Projector& y() const { return py_; }

    std::vector<double> restrict_vec(const std::vector<double>& v) const;
    std::vector<double> prolong(const std::vector<double>& w) const;

private:
    int m_ = 0;
    Projector px_, py_;
};

Dct3Operator coarse_operator(const Dct3Operator& A, const Projector& P);
Dct3Operator2D coarse_operator(const Dct3Operator2D& A, const Projector2D& P);

} // namespace dct3mg
