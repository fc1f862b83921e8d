#include "dct3mg/cos_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dct3mg {

namespace {
double max_abs(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}
} // namespace

void CosPoly::normalize() {
    if (c.empty()) c.push_back(0.0);
    const double eps = 1e-14 * max_abs(c);
    while (c.size() > 1 && std::abs(c.back()) <= eps) c.pop_back();
}

bool CosPoly::is_zero() const {
    for (double x : c)
        if (x != 0.0) return false;
    return true;
}

double eval(const CosPoly& f, double x) {
    double s = 0.0;
    for (std::size_t j = 0; j < f.c.size(); ++j) s += f.c[j] * std::cos(static_cast<double>(j) * x);
    return s;
}

CosPoly add(const CosPoly& a, const CosPoly& b) {
    std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
    for (std::size_t j = 0; j < a.c.size(); ++j) r[j] += a.c[j];
    for (std::size_t j = 0; j < b.c.size(); ++j) r[j] += b.c[j];
    return CosPoly(std::move(r));
}

CosPoly scale(const CosPoly& a, double s) {
    std::vector<double> r = a.c;
    for (double& x : r) x *= s;
    return CosPoly(std::move(r));
}

CosPoly multiply(const CosPoly& a, const CosPoly& b) {
    std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t j = 0; j < a.c.size(); ++j) {
        if (a.c[j] == 0.0) continue;
        for (std::size_t l = 0; l < b.c.size(); ++l) {
            const double w = 0.5 * a.c[j] * b.c[l];
            r[j + l] += w;
            r[j >= l ? j - l : l - j] += w;
        }
    }
    return CosPoly(std::move(r));
}

CosPoly pow_poly(const CosPoly& a, int n) {
    if (n < 0) throw std::invalid_argument("pow_poly: negative exponent");
    CosPoly r{1.0};
    for (int i = 0; i < n; ++i) r = multiply(r, a);
    return r;
}

CosPoly reflect(const CosPoly& a) {
    std::vector<double> r = a.c;
    for (std::size_t j = 1; j < r.size(); j += 2) r[j] = -r[j];
    return CosPoly(std::move(r));
}

void CosPoly2::normalize() {
    if (c.empty()) { c.assign(1, 0.0); nx = ny = 1; return; }
    const double eps = 1e-14 * max_abs(c);
    int kx = 0, ky = 0;
    for (int j1 = 0; j1 < nx; ++j1)
        for (int j2 = 0; j2 < ny; ++j2)
            if (std::abs(at(j1, j2)) > eps) { kx = std::max(kx, j1); ky = std::max(ky, j2); }
    if (kx + 1 == nx && ky + 1 == ny) return;
    CosPoly2 t(kx + 1, ky + 1);
    for (int j1 = 0; j1 <= kx; ++j1)
        for (int j2 = 0; j2 <= ky; ++j2) t.at(j1, j2) = at(j1, j2);
    *this = std::move(t);
}

double eval(const CosPoly2& f, double x, double y) {
    double s = 0.0;
    for (int j1 = 0; j1 < f.nx; ++j1) {
        double row = 0.0;
        for (int j2 = 0; j2 < f.ny; ++j2) row += f.at(j1, j2) * std::cos(j2 * y);
        s += row * std::cos(j1 * x);
    }
    return s;
}

CosPoly2 add(const CosPoly2& a, const CosPoly2& b) {
    CosPoly2 r(std::max(a.nx, b.nx), std::max(a.ny, b.ny));
    for (int j1 = 0; j1 < a.nx; ++j1)
        for (int j2 = 0; j2 < a.ny; ++j2) r.at(j1, j2) += a.at(j1, j2);
    for (int j1 = 0; j1 < b.nx; ++j1)
        for (int j2 = 0; j2 < b.ny; ++j2) r.at(j1, j2) += b.at(j1, j2);
    r.normalize();
    return r;
}

CosPoly2 multiply(const CosPoly2& a, const CosPoly2& b) {
    CosPoly2 r(a.nx + b.nx - 1, a.ny + b.ny - 1);
    for (int j1 = 0; j1 < a.nx; ++j1)
        for (int j2 = 0; j2 < a.ny; ++j2) {
            const double av = a.at(j1, j2);
            if (av == 0.0) continue;
            for (int l1 = 0; l1 < b.nx; ++l1)
                for (int l2 = 0; l2 < b.ny; ++l2) {
                    const double w = 0.25 * av * b.at(l1, l2);
                    if (w == 0.0) continue;
                    const int xs = j1 + l1, xd = std::abs(j1 - l1);
                    const int ys = j2 + l2, yd = std::abs(j2 - l2);
                    r.at(xs, ys) += w;
                    r.at(xs, yd) += w;
                    r.at(xd, ys) += w;
                    r.at(xd, yd) += w;
                }
        }
    r.normalize();
    return r;
}

CosPoly2 outer(const CosPoly& g, const CosPoly& h) {
    CosPoly2 r(static_cast<int>(g.c.size()), static_cast<int>(h.c.size()));
    for (std::size_t j1 = 0; j1 < g.c.size(); ++j1)
        for (std::size_t j2 = 0; j2 < h.c.size(); ++j2)
            r.at(static_cast<int>(j1), static_cast<int>(j2)) = g.c[j1] * h.c[j2];
    r.normalize();
    return r;
}

} // namespace dct3mg
