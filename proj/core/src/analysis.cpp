#include "dct3mg/analysis.hpp"

#include "dct3mg/transform.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dct3mg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSamples = 4096;

Eigen::VectorXd spectral_half_power(int m, const std::vector<double>& sqrt_lam, bool inverse,
                                    const Eigen::VectorXd& v) {
    Eigen::VectorXd w = dct3_apply_transpose(m, v);
    for (int j = 0; j < m; ++j) w[j] = inverse ? w[j] / sqrt_lam[j] : w[j] * sqrt_lam[j];
    return dct3_apply(m, w);
}

Eigen::VectorXd tensor_half_power(int m, const std::vector<double>& sqrt_lam, bool inverse,
                                  const Eigen::VectorXd& v) {
    Eigen::MatrixXd V(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) V(i, j) = v[static_cast<Eigen::Index>(i) * m + j];
    Eigen::MatrixXd W = tensor_apply_transpose(m, m, V);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double s = sqrt_lam[static_cast<std::size_t>(i) * m + j];
            W(i, j) = inverse ? W(i, j) / s : W(i, j) * s;
        }
    Eigen::MatrixXd R = tensor_apply(m, m, W);
    Eigen::VectorXd out(static_cast<Eigen::Index>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out[static_cast<Eigen::Index>(i) * m + j] = R(i, j);
    return out;
}

// ||M||_A via power iteration on N^T N with N = A^{1/2} M A^{-1/2}.
template <class HalfPower>
double a_norm_of(const Eigen::MatrixXd& M, const std::vector<double>& sqrt_lam, HalfPower half) {
    const Eigen::Index n = M.rows();
    std::vector<double> seed = uniform_01(static_cast<std::size_t>(n), 1234);
    Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(seed.data(), n);
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < 20000; ++it) {
        Eigen::VectorXd w = half(false, Eigen::VectorXd(M * half(true, v)));
        const double s = w.norm();
        if (s == 0.0) return 0.0;
        Eigen::VectorXd z = half(true, Eigen::VectorXd(M.transpose() * half(false, w)));
        const double zn = z.norm();
        if (zn == 0.0) return s;
        v = z / zn;
        if (std::abs(s - sigma) <= 1e-8 * std::max(s, 1e-300)) return s;
        sigma = s;
    }
    return sigma;
}

} // namespace

SmoothingConstants smoothing_constants(const Symbol& f, double omega) {
    const double sup = sup_norm(f);
    if (!(omega > 0.0) || omega > 2.0 / sup + 1e-15)
        throw std::invalid_argument("smoothing_constants: omega out of (0, 2/sup]");
    const double s = omega * sup;
    SmoothingConstants c;
    c.beta = omega * (2.0 - s);
    const double den = (1.0 - s) * (1.0 - s);
    double cand = 2.0;
    if (den > 0.0) cand = std::min(2.0, (2.0 - s) / den);
    c.alpha = omega * cand;
    return c;
}

PsiStats psi_stats(const CosPoly& psi) {
    PsiStats st;
    double mn = eval(psi, 0.0), mx = mn;
    for (int j = 1; j <= kSamples; ++j) {
        const double v = eval(psi, j * kPi / kSamples);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    if (!(mn > 0.0)) throw symbol_error("psi_stats: psi must be positive");
    st.M = mx;
    st.m = mn;
    st.mu_inf = mx / mn;
    st.gamma_star = mx / (mn * mn);
    return st;
}

double approx_constant(const Symbol& f, int q) {
    return psi_stats(extract_psi(f.poly, q)).gamma_star;
}

TheoryReport levelwise_delta(const Hierarchy1D& h, bool include_pre) {
    if (h.levels.size() < 2)
        throw std::invalid_argument("levelwise_delta: needs at least two levels");
    TheoryReport rep;
    double dpost = std::numeric_limits<double>::infinity();
    double dpre = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s + 1 < h.levels.size(); ++s) {
        const Level1D& L = h.levels[s];
        LevelConstants lc;
        lc.m = L.m;
        lc.q = L.zero.order / 2;
        const SmoothingConstants sc_pre = smoothing_constants(L.f, L.omega_pre);
        const SmoothingConstants sc_post = smoothing_constants(L.f, L.omega_post);
        lc.alpha = sc_pre.alpha;
        lc.beta = sc_post.beta;
        const CosPoly base = (L.zero.location == ZeroLoc::zero) ? L.f.poly : reflect(L.f.poly);
        const PsiStats st = psi_stats(extract_psi(base, lc.q));
        lc.gamma_star = st.gamma_star;
        lc.mu_inf = st.mu_inf;
        lc.M_psi = st.M;
        lc.m_psi = st.m;
        dpost = std::min(dpost, lc.beta / lc.gamma_star);
        dpre = std::min(dpre, lc.alpha / lc.gamma_star);
        rep.levels.push_back(lc);
    }
    rep.delta_post = std::min(dpost, 1.0);
    rep.delta_pre = include_pre ? dpre : 0.0;
    rep.bound = std::sqrt((1.0 - rep.delta_post) / (1.0 + rep.delta_pre));
    for (std::size_t s = 2; s < rep.levels.size(); ++s) {
        const double d1 = rep.levels[s - 1].mu_inf - rep.levels[s - 2].mu_inf;
        const double d2 = rep.levels[s].mu_inf - rep.levels[s - 1].mu_inf;
        if (d2 > d1 + 1e-9) rep.mu_increments_ok = false;
    }
    return rep;
}

double measured_contraction(const Hierarchy1D& h, int level_cap) {
    const int m = h.levels.front().m;
    if (m > level_cap) throw std::invalid_argument("measured_contraction: m exceeds cap");
    const std::vector<double> lam = h.levels.front().A.eigenvalues();
    std::vector<double> sqrt_lam(lam.size());
    for (std::size_t j = 0; j < lam.size(); ++j) sqrt_lam[j] = std::sqrt(lam[j]);
    Eigen::MatrixXd M(m, m);
    const SolveOptions opts;
    std::vector<double> x(m), b(m, 0.0);
    for (int i = 0; i < m; ++i) {
        std::fill(x.begin(), x.end(), 0.0);
        x[i] = 1.0;
        apply_cycle(h, x, b, opts);
        for (int k = 0; k < m; ++k) M(k, i) = x[k];
    }
    return a_norm_of(M, sqrt_lam, [&](bool inv, const Eigen::VectorXd& v) {
        return spectral_half_power(m, sqrt_lam, inv, v);
    });
}

double measured_contraction(const Hierarchy2D& h, int level_cap) {
    const int m = h.levels.front().m;
    if (m > level_cap) throw std::invalid_argument("measured_contraction: m exceeds cap");
    const int n = m * m;
    const std::vector<double> lam = h.levels.front().A.eigenvalues();
    std::vector<double> sqrt_lam(lam.size());
    for (std::size_t j = 0; j < lam.size(); ++j) sqrt_lam[j] = std::sqrt(lam[j]);
    Eigen::MatrixXd M(n, n);
    const SolveOptions opts;
    std::vector<double> x(n), b(n, 0.0);
    for (int i = 0; i < n; ++i) {
        std::fill(x.begin(), x.end(), 0.0);
        x[i] = 1.0;
        apply_cycle(h, x, b, opts);
        for (int k = 0; k < n; ++k) M(k, i) = x[k];
    }
    return a_norm_of(M, sqrt_lam, [&](bool inv, const Eigen::VectorXd& v) {
        return tensor_half_power(m, sqrt_lam, inv, v);
    });
}

double verify_cutting_identity(int m) {
    if (m < 2 || m % 2 != 0 || m > 512)
        throw std::invalid_argument("verify_cutting_identity: m must be even, 2..512");
    const int mc = m / 2;
    const Eigen::MatrixXd& Q = dct3_matrix(m);
    const Eigen::MatrixXd& Qc = dct3_matrix(mc);
    Eigen::MatrixXd D(mc, m);
    const double w2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < mc; ++i)
        for (int j = 0; j < m; ++j) D(i, j) = (Q(2 * i, j) + Q(2 * i + 1, j)) * w2;
    const Eigen::MatrixXd C = Qc.transpose() * D; // coarse-basis coefficients per fine column

    double resid = 0.0;
    for (int i = 0; i < mc; ++i) resid = std::max(resid, std::abs(D(i, mc)));

    std::vector<bool> used(mc, false);
    for (int j = 0; j < m; ++j) {
        if (j == mc) continue;
        int k = 0;
        double best = -1.0;
        for (int i = 0; i < mc; ++i)
            if (std::abs(C(i, j)) > best) {
                best = std::abs(C(i, j));
                k = i;
            }
        const int expected_k = (j < mc) ? j : m - j;
        if (k != expected_k)
            throw std::runtime_error("verify_cutting_identity: no consistent permutation at column " +
                                     std::to_string(j));
        const double w = C(k, j);
        for (int i = 0; i < mc; ++i) resid = std::max(resid, std::abs(D(i, j) - w * Qc(i, k)));
        const double weight = std::cos(j * kPi / (2.0 * m));
        resid = std::max(resid, std::abs(std::abs(w) - weight));
        if (j < mc) {
            if (w < 0.0) throw std::runtime_error("verify_cutting_identity: negative weight on the kept block");
        } else {
            if (used[k]) throw std::runtime_error("verify_cutting_identity: duplicated coarse column");
            used[k] = true;
        }
    }
    return resid;
}

} // namespace dct3mg
