#include "dct3mg/solver.hpp"

#include "dct3mg/transform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace dct3mg {

namespace {

constexpr double kPi = std::numbers::pi;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

void check_spd(const std::vector<double>& lam, int m) {
    double mn = lam.empty() ? 0.0 : lam[0];
    for (double l : lam) mn = std::min(mn, l);
    if (!(mn > 0.0))
        throw symbol_error("build_hierarchy: level operator at m=" + std::to_string(m) +
                           " is not positive definite (min eigenvalue " + std::to_string(mn) + ")");
}

// Allocation-free V-cycle for 1D hierarchies: all per-level work vectors are
// set up once, so per-iteration cost stays proportional to the matvec.
class Cycler1D {
public:
    explicit Cycler1D(const Hierarchy1D& h) : h_(h) {
        const std::size_t L = h.levels.size();
        t_.resize(L);
        mid_.resize(L);
        xs_.resize(L);
        bs_.resize(L);
        for (std::size_t s = 0; s < L; ++s) {
            const int m = h.levels[s].m;
            t_[s].resize(m);
            mid_[s].resize(m);
            if (s > 0) {
                xs_[s].resize(m);
                bs_[s].resize(m);
            }
        }
    }

    void cycle(std::vector<double>& x, const std::vector<double>& b, const SolveOptions& o) {
        run(0, x.data(), b.data(), o);
    }

private:
    void run(std::size_t s, double* x, const double* b, const SolveOptions& o) {
        const Level1D& L = h_.levels[s];
        const int m = L.m;
        if (!L.P) {
            const std::vector<double> xc = h_.coarse.solve(std::vector<double>(b, b + m));
            std::copy(xc.begin(), xc.end(), x);
            return;
        }
        double* t = t_[s].data();
        for (int k = 0; k < o.nu_pre; ++k) {
            L.A.matvec(x, t);
            for (int i = 0; i < m; ++i) x[i] += L.omega_pre * (b[i] - t[i]);
        }
        L.A.matvec(x, t);
        for (int i = 0; i < m; ++i) t[i] = b[i] - t[i];
        double* mid = mid_[s].data();
        L.P->Cp().matvec(t, mid);
        cut_into(mid, m, bs_[s + 1].data());
        std::fill(xs_[s + 1].begin(), xs_[s + 1].end(), 0.0);
        run(s + 1, xs_[s + 1].data(), bs_[s + 1].data(), o);
        cut_transpose_into(xs_[s + 1].data(), m, mid);
        L.P->Cp().matvec(mid, t);
        for (int i = 0; i < m; ++i) x[i] += t[i];
        for (int k = 0; k < o.nu_post; ++k) {
            L.A.matvec(x, t);
            for (int i = 0; i < m; ++i) x[i] += L.omega_post * (b[i] - t[i]);
        }
    }

    const Hierarchy1D& h_;
    std::vector<std::vector<double>> t_, mid_, xs_, bs_;
};

class Cycler2D {
public:
    explicit Cycler2D(const Hierarchy2D& h) : h_(h) {}

    void cycle(std::vector<double>& x, const std::vector<double>& b, const SolveOptions& o) {
        run(0, x, b, o);
    }

private:
    void run(std::size_t s, std::vector<double>& x, const std::vector<double>& b, const SolveOptions& o) {
        const Level2D& L = h_.levels[s];
        if (!L.P) {
            x = h_.coarse.solve(b);
            return;
        }
        std::vector<double> t(x.size());
        for (int k = 0; k < o.nu_pre; ++k) {
            L.A.matvec(x.data(), t.data());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += L.omega_pre * (b[i] - t[i]);
        }
        L.A.matvec(x.data(), t.data());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = b[i] - t[i];
        const std::vector<double> rc = L.P->restrict_vec(t);
        std::vector<double> ec(rc.size(), 0.0);
        run(s + 1, ec, rc, o);
        const std::vector<double> corr = L.P->prolong(ec);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += corr[i];
        for (int k = 0; k < o.nu_post; ++k) {
            L.A.matvec(x.data(), t.data());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += L.omega_post * (b[i] - t[i]);
        }
    }

    const Hierarchy2D& h_;
};

template <class Hier, class Cycler>
SolveReport run_iterations(const Hier& h, const std::vector<double>& b, const SolveOptions& o) {
    if (b.size() != static_cast<std::size_t>(h.unknowns()))
        throw std::invalid_argument("solve: rhs size mismatch");
    if (!(o.tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
    SolveReport rep;
    const auto t0 = std::chrono::steady_clock::now();
    const auto& A0 = h.levels.front().A;
    const double bn = norm2(b);
    std::vector<double> x(b.size(), 0.0), r(b.size());
    if (bn == 0.0) {
        rep.converged = true;
    } else {
        Cycler cyc(h);
        for (int it = 1; it <= o.max_iters; ++it) {
            cyc.cycle(x, b, o);
            A0.matvec(x.data(), r.data());
            for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
            const double res = norm2(r) / bn;
            rep.residual_history.push_back(res);
            rep.iterations = it;
            rep.final_relative_residual = res;
            if (res <= o.tol) {
                rep.converged = true;
                break;
            }
            if (!std::isfinite(res) || res > 1e12) break;
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct ZeroChain {
    ZeroInfo z;
    int r_next(const std::optional<int>& forced) const { return forced ? *forced : z.order / 2; }
    void advance() { z = project_zero(z); }
};

} // namespace

std::vector<double> uniform_01(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return v;
}

CoarseSolve1D CoarseSolve1D::build(const Dct3Operator& A, int dense_cap) {
    CoarseSolve1D cs;
    cs.m_ = A.size();
    if (cs.m_ <= dense_cap) {
        cs.dense_ = true;
        cs.ldlt_.compute(A.materialize_dense(cs.m_));
        if (cs.ldlt_.info() != Eigen::Success)
            throw std::runtime_error("coarse solve: dense factorization failed");
    } else {
        std::vector<double> lam = A.eigenvalues();
        cs.inv_lambda_.resize(lam.size());
        for (std::size_t j = 0; j < lam.size(); ++j) {
            if (!(lam[j] > 0.0)) throw std::runtime_error("coarse solve: non-positive eigenvalue");
            cs.inv_lambda_[j] = 1.0 / lam[j];
        }
    }
    return cs;
}

std::vector<double> CoarseSolve1D::solve(const std::vector<double>& b) const {
    if (static_cast<int>(b.size()) != m_) throw std::invalid_argument("coarse solve: size mismatch");
    if (dense_) {
        Eigen::Map<const Eigen::VectorXd> bb(b.data(), m_);
        Eigen::VectorXd x = ldlt_.solve(bb);
        return std::vector<double>(x.data(), x.data() + m_);
    }
    Eigen::Map<const Eigen::VectorXd> bb(b.data(), m_);
    Eigen::VectorXd w = dct3_apply_transpose(m_, bb);
    for (int j = 0; j < m_; ++j) w[j] *= inv_lambda_[j];
    Eigen::VectorXd x = dct3_apply(m_, w);
    return std::vector<double>(x.data(), x.data() + m_);
}

CoarseSolve2D CoarseSolve2D::build(const Dct3Operator2D& A, int dense_cap) {
    CoarseSolve2D cs;
    cs.m_ = A.size();
    const int n = A.unknowns();
    if (n <= dense_cap) {
        cs.dense_ = true;
        cs.ldlt_.compute(A.materialize_dense(cs.m_));
        if (cs.ldlt_.info() != Eigen::Success)
            throw std::runtime_error("coarse solve: dense factorization failed");
    } else {
        std::vector<double> lam = A.eigenvalues();
        cs.inv_lambda_.resize(lam.size());
        for (std::size_t j = 0; j < lam.size(); ++j) {
            if (!(lam[j] > 0.0)) throw std::runtime_error("coarse solve: non-positive eigenvalue");
            cs.inv_lambda_[j] = 1.0 / lam[j];
        }
    }
    return cs;
}

std::vector<double> CoarseSolve2D::solve(const std::vector<double>& b) const {
    const std::size_t n = static_cast<std::size_t>(m_) * m_;
    if (b.size() != n) throw std::invalid_argument("coarse solve: size mismatch");
    if (dense_) {
        Eigen::Map<const Eigen::VectorXd> bb(b.data(), static_cast<Eigen::Index>(n));
        Eigen::VectorXd x = ldlt_.solve(bb);
        return std::vector<double>(x.data(), x.data() + n);
    }
    Eigen::MatrixXd V(m_, m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) V(i, j) = b[static_cast<std::size_t>(i) * m_ + j];
    Eigen::MatrixXd W = tensor_apply_transpose(m_, m_, V);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) W(i, j) *= inv_lambda_[static_cast<std::size_t>(i) * m_ + j];
    Eigen::MatrixXd R = tensor_apply(m_, m_, W);
    std::vector<double> x(n);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) x[static_cast<std::size_t>(i) * m_ + j] = R(i, j);
    return x;
}

Hierarchy1D build_hierarchy_1d(Symbol f0, ZeroInfo zero, std::optional<int> r, int m0,
                               Method method, int min_coarse) {
    if (!power_of_two(m0) || m0 < 16)
        throw std::invalid_argument("build_hierarchy: m0 must be a power of two, at least 16");
    if (min_coarse < 8 || !power_of_two(min_coarse))
        throw std::invalid_argument("build_hierarchy: bad min_coarse");
    if (zero.order <= 0 || zero.order % 2 != 0)
        throw symbol_error("build_hierarchy: zero order must be a positive even integer");
    if (r && *r < 1) throw std::invalid_argument("build_hierarchy: r must be >= 1");
    if (!is_nonnegative(f0.poly)) throw symbol_error("build_hierarchy: symbol is negative");

    const int q = zero.order / 2;
    // Confirms the declared zero: the factorization throws if the symbol does
    // not vanish there with the stated even order.
    if (zero.location == ZeroLoc::zero)
        extract_psi(f0.poly, q);
    else
        extract_psi(reflect(f0.poly), q);

    if (zero.location == ZeroLoc::zero && f0.mass == 0.0) f0 = strang_correct(f0.poly, m0);

    Hierarchy1D h;
    Symbol f = std::move(f0);
    ZeroChain chain{zero};
    int m = m0;
    while (true) {
        Level1D L;
        L.m = m;
        L.A = Dct3Operator::from_symbol(m, f);
        check_spd(L.A.eigenvalues(), m);
        const double sup = sup_norm(f);
        L.omega_pre = 2.0 / sup;
        L.omega_post = 1.0 / sup;
        L.zero = chain.z;
        L.f = f;
        const bool coarsest = (method == Method::tgm) ? !h.levels.empty() : m <= min_coarse;
        if (coarsest) {
            h.levels.push_back(std::move(L));
            break;
        }
        L.r = chain.r_next(r);
        const Symbol p = projector_poly(chain.z, L.r, m);
        L.P = Projector::from_symbol(m, p);
        f = galerkin_symbol(f, p);
        chain.advance();
        m /= 2;
        h.levels.push_back(std::move(L));
    }
    h.coarse = CoarseSolve1D::build(h.levels.back().A);
    return h;
}

Hierarchy2D build_hierarchy_2d(TensorSymbol f0, ZeroInfo zero, std::optional<int> r, int m0,
                               Method method, int min_coarse) {
    if (!power_of_two(m0) || m0 < 16)
        throw std::invalid_argument("build_hierarchy: m0 must be a power of two, at least 16");
    if (min_coarse < 8 || !power_of_two(min_coarse))
        throw std::invalid_argument("build_hierarchy: bad min_coarse");
    if (zero.order <= 0 || zero.order % 2 != 0)
        throw symbol_error("build_hierarchy: zero order must be a positive even integer");
    if (r && *r < 1) throw std::invalid_argument("build_hierarchy: r must be >= 1");
    if (f0.terms.empty()) throw symbol_error("build_hierarchy: empty symbol");

    {
        // Nonnegativity of the polynomial part on a sample grid.
        const int S = 128;
        double mn = 0.0, mx = 0.0;
        for (int i = 0; i <= S; ++i)
            for (int j = 0; j <= S; ++j) {
                double v = 0.0;
                for (const TensorTerm& t : f0.terms)
                    v += eval(t.x.poly, i * kPi / S) * eval(t.y.poly, j * kPi / S);
                mn = std::min(mn, v);
                mx = std::max(mx, std::abs(v));
            }
        if (mn < -1e-12 * std::max(mx, 1.0)) throw symbol_error("build_hierarchy: symbol is negative");
    }

    if (zero.location == ZeroLoc::zero) {
        bool corrected = false;
        for (const TensorTerm& t : f0.terms)
            if (t.x.poly.is_zero() && t.y.poly.is_zero()) corrected = true;
        if (!corrected) {
            double c0 = 0.0;
            for (const TensorTerm& t : f0.terms)
                c0 += eval(t.x.poly, 0.0) * eval(t.y.poly, kPi / m0);
            if (!(c0 > 0.0)) throw symbol_error("build_hierarchy: rank correction is not positive");
            f0.terms.push_back({Symbol{CosPoly{}, c0}, Symbol{CosPoly{}, 1.0}});
        }
    }

    Hierarchy2D h;
    TensorSymbol f = std::move(f0);
    ZeroChain chain{zero};
    int m = m0;
    while (true) {
        Level2D L;
        L.m = m;
        L.A = Dct3Operator2D::from_symbol(m, f);
        check_spd(L.A.eigenvalues(), m);
        const double sup = sup_norm(f);
        L.omega_pre = 2.0 / sup;
        L.omega_post = 1.0 / sup;
        L.zero = chain.z;
        L.f = f;
        const bool coarsest = (method == Method::tgm) ? !h.levels.empty() : m <= min_coarse;
        if (coarsest) {
            h.levels.push_back(std::move(L));
            break;
        }
        L.r = chain.r_next(r);
        const Symbol p = projector_poly(chain.z, L.r, m);
        L.P = Projector2D::from_symbols(m, p, p);
        f = galerkin_symbol(f, p, p);
        chain.advance();
        m /= 2;
        h.levels.push_back(std::move(L));
    }
    h.coarse = CoarseSolve2D::build(h.levels.back().A);
    return h;
}

Symbol problem_symbol_1d(ZeroLoc loc, int q) {
    if (q < 1) throw std::invalid_argument("problem_symbol: q must be >= 1");
    const CosPoly base = (loc == ZeroLoc::zero) ? CosPoly{2.0, -2.0} : CosPoly{2.0, 2.0};
    return Symbol{pow_poly(base, q), 0.0};
}

TensorSymbol problem_symbol_2d(ZeroLoc loc, int q) {
    const Symbol u = problem_symbol_1d(loc, q);
    const Symbol one{CosPoly{1.0}, 0.0};
    TensorSymbol f;
    f.terms.push_back({u, one});
    f.terms.push_back({one, u});
    return f;
}

std::vector<double> richardson(const Dct3Operator& A, std::vector<double> x,
                               const std::vector<double>& b, double omega, int nu) {
    if (!(omega > 0.0)) throw std::invalid_argument("richardson: omega must be positive");
    if (nu < 0) throw std::invalid_argument("richardson: nu must be >= 0");
    std::vector<double> t(x.size());
    for (int k = 0; k < nu; ++k) {
        A.matvec(x.data(), t.data());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += omega * (b[i] - t[i]);
    }
    return x;
}

std::vector<double> richardson(const Dct3Operator2D& A, std::vector<double> x,
                               const std::vector<double>& b, double omega, int nu) {
    if (!(omega > 0.0)) throw std::invalid_argument("richardson: omega must be positive");
    if (nu < 0) throw std::invalid_argument("richardson: nu must be >= 0");
    std::vector<double> t(x.size());
    for (int k = 0; k < nu; ++k) {
        A.matvec(x.data(), t.data());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += omega * (b[i] - t[i]);
    }
    return x;
}

SolveReport tgm_solve(const Hierarchy1D& h, const std::vector<double>& b, const SolveOptions& opts) {
    if (h.levels.size() != 2) throw std::invalid_argument("tgm_solve: hierarchy must have exactly two levels");
    return run_iterations<Hierarchy1D, Cycler1D>(h, b, opts);
}

SolveReport tgm_solve(const Hierarchy2D& h, const std::vector<double>& b, const SolveOptions& opts) {
    if (h.levels.size() != 2) throw std::invalid_argument("tgm_solve: hierarchy must have exactly two levels");
    return run_iterations<Hierarchy2D, Cycler2D>(h, b, opts);
}

SolveReport vcycle_solve(const Hierarchy1D& h, const std::vector<double>& b, const SolveOptions& opts) {
    return run_iterations<Hierarchy1D, Cycler1D>(h, b, opts);
}

SolveReport vcycle_solve(const Hierarchy2D& h, const std::vector<double>& b, const SolveOptions& opts) {
    return run_iterations<Hierarchy2D, Cycler2D>(h, b, opts);
}

void apply_cycle(const Hierarchy1D& h, std::vector<double>& x, const std::vector<double>& b,
                 const SolveOptions& opts) {
    Cycler1D cyc(h);
    cyc.cycle(x, b, opts);
}

void apply_cycle(const Hierarchy2D& h, std::vector<double>& x, const std::vector<double>& b,
                 const SolveOptions& opts) {
    Cycler2D cyc(h);
    cyc.cycle(x, b, opts);
}

namespace {

template <class Hier>
std::vector<double> make_rhs_impl(const Hier& h, RhsMode mode, std::uint64_t seed) {
    const std::size_t n = static_cast<std::size_t>(h.unknowns());
    switch (mode) {
        case RhsMode::zero:
            return std::vector<double>(n, 0.0);
        case RhsMode::ones_solution:
            return h.levels.front().A.matvec(std::vector<double>(n, 1.0));
        case RhsMode::random_solution:
        default:
            return h.levels.front().A.matvec(uniform_01(n, seed));
    }
}

} // namespace

std::vector<double> make_rhs(const Hierarchy1D& h, RhsMode mode, std::uint64_t seed) {
    return make_rhs_impl(h, mode, seed);
}

std::vector<double> make_rhs(const Hierarchy2D& h, RhsMode mode, std::uint64_t seed) {
    return make_rhs_impl(h, mode, seed);
}

} // namespace dct3mg
