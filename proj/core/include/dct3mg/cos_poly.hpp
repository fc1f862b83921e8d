#pragma once

#include <cstddef>
#include <vector>

namespace dct3mg {

// Even trigonometric polynomial f(x) = sum_j c[j] cos(j x).
// The zero polynomial is {0}; trailing zero coefficients are trimmed.
struct CosPoly {
    std::vector<double> c;

    CosPoly() : c{0.0} {}
    CosPoly(std::initializer_list<double> cs) : c(cs) { normalize(); }
    explicit CosPoly(std::vector<double> cs) : c(std::move(cs)) { normalize(); }

    void normalize();
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const;
    double operator[](std::size_t j) const { return j < c.size() ? c[j] : 0.0; }
};

double eval(const CosPoly& f, double x);
CosPoly add(const CosPoly& a, const CosPoly& b);
CosPoly scale(const CosPoly& a, double s);
// Product via cos(jx)cos(lx) = [cos((j+l)x) + cos(|j-l|x)]/2.
CosPoly multiply(const CosPoly& a, const CosPoly& b);
CosPoly pow_poly(const CosPoly& a, int n);
// f(pi - x): flips the sign of odd harmonics.
CosPoly reflect(const CosPoly& a);

// Even bivariate polynomial f(x,y) = sum c[j1][j2] cos(j1 x) cos(j2 y),
// stored row-major with nx*ny entries (nx = x-degree + 1).
struct CosPoly2 {
    std::vector<double> c;
    int nx = 1, ny = 1;

    CosPoly2() : c{0.0} {}
    CosPoly2(int nx_, int ny_) : c(static_cast<std::size_t>(nx_) * ny_, 0.0), nx(nx_), ny(ny_) {}

    double& at(int j1, int j2) { return c[static_cast<std::size_t>(j1) * ny + j2]; }
    double at(int j1, int j2) const { return c[static_cast<std::size_t>(j1) * ny + j2]; }
    void normalize();
};

double eval(const CosPoly2& f, double x, double y);
CosPoly2 add(const CosPoly2& a, const CosPoly2& b);
CosPoly2 multiply(const CosPoly2& a, const CosPoly2& b);
// g(x) * h(y) as a coefficient grid.
CosPoly2 outer(const CosPoly& g, const CosPoly& h);

} // namespace dct3mg
