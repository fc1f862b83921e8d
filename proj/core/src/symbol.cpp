#include "dct3mg/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dct3mg {

namespace {

constexpr double kPi = std::numbers::pi;

CosPoly even_harmonics(const CosPoly& h) {
    std::vector<double> r((h.c.size() + 1) / 2, 0.0);
    for (std::size_t l = 0; l < r.size(); ++l) r[l] = h.c[2 * l];
    return CosPoly(std::move(r));
}

double coarse_mass(double fine_eig0, double proj_eig0, double coarse_poly0) {
    double m = fine_eig0 * proj_eig0 * proj_eig0 - coarse_poly0;
    const double scale = std::max({1.0, std::abs(fine_eig0) * proj_eig0 * proj_eig0, std::abs(coarse_poly0)});
    if (m < -1e-12 * scale)
        throw symbol_error("galerkin_symbol: negative coarse mass, symbol/projector inconsistent");
    return std::max(m, 0.0);
}

// cos basis -> monomial coefficients in t = cos x, via the Chebyshev recursion.
std::vector<double> to_monomial(const CosPoly& f) {
    const int n = static_cast<int>(f.c.size());
    std::vector<double> out(n, 0.0);
    std::vector<double> tm1{1.0}, t0{0.0, 1.0}; // T_0, T_1
    for (int j = 0; j < n; ++j) {
        const std::vector<double>& tj = (j == 0) ? tm1 : t0;
        for (std::size_t i = 0; i < tj.size(); ++i) out[i] += f.c[j] * tj[i];
        if (j >= 1 && j + 1 < n) {
            std::vector<double> tn(j + 2, 0.0);
            for (std::size_t i = 0; i < t0.size(); ++i) tn[i + 1] += 2.0 * t0[i];
            for (std::size_t i = 0; i < tm1.size(); ++i) tn[i] -= tm1[i];
            tm1 = std::move(t0);
            t0 = std::move(tn);
        }
    }
    return out;
}

CosPoly from_monomial(const std::vector<double>& m) {
    CosPoly t{0.0, 1.0};
    CosPoly power{1.0};
    CosPoly out{0.0};
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (j > 0) power = multiply(power, t);
        out = add(out, scale(power, m[j]));
    }
    return out;
}

} // namespace

double eval(const TensorSymbol& f, double x, double y) {
    double s = 0.0;
    for (const TensorTerm& t : f.terms) s += eval(t.x.poly, x) * eval(t.y.poly, y);
    return s;
}

double eigenvalue_at(const Symbol& f, double x) {
    return eval(f.poly, x) + (x == 0.0 ? f.mass : 0.0);
}

Symbol galerkin_symbol(const Symbol& f, const Symbol& p) {
    const CosPoly phi{1.0, 1.0};
    const CosPoly h = multiply(phi, multiply(f.poly, multiply(p.poly, p.poly)));
    CosPoly coarse = even_harmonics(h);
    const double fe = eval(f.poly, 0.0) + f.mass;
    const double pe = eval(p.poly, 0.0) + p.mass;
    const double mass = coarse_mass(fe, pe, eval(coarse, 0.0));
    return Symbol(std::move(coarse), mass);
}

Symbol2 galerkin_symbol(const Symbol2& f, const Symbol2& p) {
    const CosPoly2 phi2 = outer(CosPoly{1.0, 1.0}, CosPoly{1.0, 1.0});
    const CosPoly2 h = multiply(phi2, multiply(f.poly, multiply(p.poly, p.poly)));
    CosPoly2 coarse((h.nx + 1) / 2, (h.ny + 1) / 2);
    for (int l1 = 0; l1 < coarse.nx; ++l1)
        for (int l2 = 0; l2 < coarse.ny; ++l2) coarse.at(l1, l2) = h.at(2 * l1, 2 * l2);
    coarse.normalize();
    const double fe = eval(f.poly, 0.0, 0.0) + f.mass;
    const double pe = eval(p.poly, 0.0, 0.0) + p.mass;
    const double mass = coarse_mass(fe, pe, eval(coarse, 0.0, 0.0));
    return Symbol2(std::move(coarse), mass);
}

TensorSymbol galerkin_symbol(const TensorSymbol& f, const Symbol& px, const Symbol& py) {
    TensorSymbol out;
    out.terms.reserve(f.terms.size());
    for (const TensorTerm& t : f.terms)
        out.terms.push_back({galerkin_symbol(t.x, px), galerkin_symbol(t.y, py)});
    return out;
}

CosPoly psi_step(const CosPoly& psi, int q, const CosPoly& p) {
    const CosPoly phi{1.0, 1.0};
    const CosPoly h = multiply(phi, multiply(p, psi));
    return scale(even_harmonics(h), std::ldexp(1.0, -q));
}

ZeroInfo project_zero(const ZeroInfo& z) {
    if (z.order <= 0 || z.order % 2 != 0) throw symbol_error("project_zero: order must be positive even");
    if (z.location == ZeroLoc::zero) return z;
    return ZeroInfo{ZeroLoc::zero, z.order + 2};
}

Symbol projector_poly(const ZeroInfo& z, int r, int m) {
    if (r < 1) throw symbol_error("projector_poly: order r must be >= 1");
    if (z.location == ZeroLoc::zero) return Symbol(pow_poly(CosPoly{2.0, 2.0}, r), 0.0);
    CosPoly p = pow_poly(CosPoly{2.0, -2.0}, r);
    const double d = eval(p, kPi / m);
    return Symbol(std::move(p), d);
}

Symbol strang_correct(const CosPoly& f, int m) {
    if (m < 2) throw symbol_error("strang_correct: m too small");
    double scale = 0.0;
    for (double c : f.c) scale = std::max(scale, std::abs(c));
    if (std::abs(eval(f, 0.0)) > 1e-12 * std::max(1.0, scale))
        throw symbol_error("strang_correct: symbol does not vanish at 0");
    return Symbol(f, eval(f, kPi / m));
}

CosPoly extract_psi(const Symbol& f, int q) {
    if (q < 1) throw symbol_error("extract_psi: q must be >= 1");
    double sup = 0.0;
    for (double c : f.poly.c) sup += std::abs(c);
    std::vector<double> mono = to_monomial(f.poly);
    // q synthetic divisions by (1 - t); remainder is the value at t = 1.
    for (int step = 0; step < q; ++step) {
        const int n = static_cast<int>(mono.size());
        double rem = 0.0;
        for (double c : mono) rem += c;
        if (std::abs(rem) > 1e-9 * std::max(1.0, sup))
            throw symbol_error("extract_psi: zero order at 0 is lower than 2q");
        std::vector<double> quot(std::max(n - 1, 1), 0.0);
        double carry = 0.0; // divide by (1-t): synthesize from the top coefficient down
        for (int i = n - 1; i >= 1; --i) {
            carry += mono[i];
            quot[i - 1] = -carry;
        }
        mono = std::move(quot);
    }
    CosPoly psi = from_monomial(mono);
    for (int i = 0; i < 2048; ++i) {
        const double x = kPi * i / 2047.0;
        if (eval(psi, x) <= 0.0)
            throw symbol_error("extract_psi: quotient not positive, zero order exceeds 2q");
    }
    return psi;
}

double sup_norm(const Symbol& f) {
    constexpr int S = 4096;
    double s = 0.0;
    for (int i = 0; i < S; ++i) s = std::max(s, std::abs(eval(f.poly, kPi * i / (S - 1))));
    return std::max(s, std::abs(eval(f.poly, 0.0) + f.mass));
}

double sup_norm(const Symbol2& f) {
    constexpr int S = 1024;
    std::vector<double> xs(S);
    for (int i = 0; i < S; ++i) xs[i] = kPi * i / (S - 1);
    // f(x_i, y_j) = sum_j1 cos(j1 x_i) * row_j1(y_j)
    std::vector<std::vector<double>> rows(f.poly.nx, std::vector<double>(S, 0.0));
    for (int j1 = 0; j1 < f.poly.nx; ++j1)
        for (int j = 0; j < S; ++j) {
            double v = 0.0;
            for (int j2 = 0; j2 < f.poly.ny; ++j2) v += f.poly.at(j1, j2) * std::cos(j2 * xs[j]);
            rows[j1][j] = v;
        }
    double s = 0.0;
    std::vector<double> acc(S);
    for (int i = 0; i < S; ++i) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (int j1 = 0; j1 < f.poly.nx; ++j1) {
            const double cx = std::cos(j1 * xs[i]);
            for (int j = 0; j < S; ++j) acc[j] += cx * rows[j1][j];
        }
        for (int j = 0; j < S; ++j) s = std::max(s, std::abs(acc[j]));
    }
    return std::max(s, std::abs(eval(f.poly, 0.0, 0.0) + f.mass));
}

double sup_norm(const TensorSymbol& f) {
    constexpr int S = 2048;
    const std::size_t K = f.terms.size();
    std::vector<std::vector<double>> gx(K, std::vector<double>(S)), hy(K, std::vector<double>(S));
    for (std::size_t k = 0; k < K; ++k) {
        for (int i = 0; i < S; ++i) {
            const double x = kPi * i / (S - 1);
            gx[k][i] = eval(f.terms[k].x.poly, x);
            hy[k][i] = eval(f.terms[k].y.poly, x);
        }
        gx[k][0] += f.terms[k].x.mass; // eigenvalue semantics at frequency 0
        hy[k][0] += f.terms[k].y.mass;
    }
    double s = 0.0;
    std::vector<double> acc(S);
    for (int i = 0; i < S; ++i) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::size_t k = 0; k < K; ++k) {
            const double g = gx[k][i];
            if (g == 0.0) continue;
            const double* h = hy[k].data();
            for (int j = 0; j < S; ++j) acc[j] += g * h[j];
        }
        for (int j = 0; j < S; ++j) s = std::max(s, std::abs(acc[j]));
    }
    return s;
}

bool is_nonnegative(const Symbol& f, double tol_rel) {
    const double sup = sup_norm(Symbol(f.poly, 0.0));
    for (int i = 0; i < 4096; ++i)
        if (eval(f.poly, kPi * i / 4095.0) < -tol_rel * std::max(1.0, sup)) return false;
    return true;
}

GridView to_grid(const TensorSymbol& f) {
    GridView v;
    CosPoly2 grid;
    double eig00 = 0.0;
    bool faithful = true;
    for (const TensorTerm& t : f.terms) {
        grid = add(grid, outer(t.x.poly, t.y.poly));
        eig00 += (eval(t.x.poly, 0.0) + t.x.mass) * (eval(t.y.poly, 0.0) + t.y.mass);
        const bool xm = t.x.mass != 0.0, ym = t.y.mass != 0.0;
        if ((xm && !t.y.poly.is_zero() && !ym) || (ym && !t.x.poly.is_zero() && !xm)) faithful = false;
    }
    v.poly = std::move(grid);
    v.corner_mass = eig00 - eval(v.poly, 0.0, 0.0);
    v.faithful = faithful;
    return v;
}

} // namespace dct3mg
