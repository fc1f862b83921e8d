#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dct3mg/coarsening.hpp"
#include "dct3mg/solver.hpp"
#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <random>

using namespace dct3mg;

namespace {
const double kPi = std::acos(-1.0);

std::vector<double> random_vec(std::size_t n, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(gen);
    return v;
}

// Projector order the setup would pick for a level with this zero.
int auto_order(const ZeroInfo& z) { return z.order / 2; }

Symbol level0_symbol(ZeroLoc loc, int q, int m) {
    Symbol f = problem_symbol_1d(loc, q);
    if (loc == ZeroLoc::zero) f = strang_correct(f.poly, m);
    return f;
}
} // namespace

TEST_CASE("cut averages adjacent pairs") {
    auto w = cut(std::vector<double>(8, 1.0));
    REQUIRE(w.size() == 4);
    for (double x : w) CHECK(x == doctest::Approx(std::sqrt(2.0)));

    auto e = cut(std::vector<double>{1.0, 0.0, 0.0, 0.0});
    CHECK(e[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(e[1] == doctest::Approx(0.0));

    CHECK_THROWS((void)cut(std::vector<double>(5, 1.0)));
}

TEST_CASE("cut rows are orthonormal") {
    const int m = 32;
    auto w = random_vec(16, 1);
    auto back = cut(cut_transpose(w));
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(back[i] == doctest::Approx(w[i]).epsilon(1e-14));

    auto v = random_vec(m, 2);
    auto w2 = random_vec(m / 2, 3);
    double lhs = 0.0, rhs = 0.0;
    auto cv = cut(v);
    auto tw = cut_transpose(w2);
    for (int i = 0; i < m / 2; ++i) lhs += cv[static_cast<std::size_t>(i)] * w2[static_cast<std::size_t>(i)];
    for (int i = 0; i < m; ++i) rhs += v[static_cast<std::size_t>(i)] * tw[static_cast<std::size_t>(i)];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("in-place cut forms match the allocating ones") {
    auto v = random_vec(16, 4);
    std::vector<double> w(8);
    cut_into(v.data(), 16, w.data());
    auto want = cut(v);
    for (int i = 0; i < 8; ++i) CHECK(w[static_cast<std::size_t>(i)] == want[static_cast<std::size_t>(i)]);

    std::vector<double> back(16);
    cut_transpose_into(w.data(), 16, back.data());
    auto want2 = cut_transpose(w);
    for (int i = 0; i < 16; ++i)
        CHECK(back[static_cast<std::size_t>(i)] == want2[static_cast<std::size_t>(i)]);
}

TEST_CASE("restriction with p = 2 + 2cos scales constants by 4 sqrt(2)") {
    auto P = Projector::from_symbol(8, Symbol{CosPoly{2.0, 2.0}});
    auto w = P.restrict_vec(std::vector<double>(8, 1.0));
    REQUIRE(w.size() == 4);
    for (double x : w) CHECK(x == doctest::Approx(4.0 * std::sqrt(2.0)));
}

TEST_CASE("restriction and prolongation are adjoint") {
    const int m = 32;
    auto P = Projector::from_symbol(m, Symbol{CosPoly{2.0, 2.0}});
    auto v = random_vec(m, 5);
    auto w = random_vec(m / 2, 6);
    auto Pv = P.restrict_vec(v);
    auto Ptw = P.prolong(w);
    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < m / 2; ++i) lhs += Pv[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
    for (int i = 0; i < m; ++i) rhs += v[static_cast<std::size_t>(i)] * Ptw[static_cast<std::size_t>(i)];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("projector matches its dense form and has full rank") {
    for (int m : {8, 16, 32, 64}) {
        for (ZeroLoc loc : {ZeroLoc::zero, ZeroLoc::pi}) {
            for (int q = 1; q <= 3; ++q) {
                if (loc == ZeroLoc::pi && q > 1) continue;
                const ZeroInfo z{loc, 2 * q};
                Symbol p = projector_poly(z, auto_order(z), m);
                auto P = Projector::from_symbol(m, p);
                Eigen::MatrixXd D = oracle::dense_projector(m, p);

                auto v = random_vec(static_cast<std::size_t>(m), static_cast<unsigned>(m + q));
                auto w = P.restrict_vec(v);
                Eigen::VectorXd want = D * oracle::to_eigen(v);
                const double scale = std::max(1.0, want.cwiseAbs().maxCoeff());
                for (int i = 0; i < m / 2; ++i)
                    CHECK(std::abs(w[static_cast<std::size_t>(i)] - want(i)) <= 1e-11 * scale);

                Eigen::JacobiSVD<Eigen::MatrixXd> svd(D);
                CHECK(svd.singularValues().minCoeff() > 1e-9);
            }
        }
    }
}

TEST_CASE("rank-deficient projector symbols are rejected") {
    CHECK_THROWS_AS((void)Projector::from_symbol(8, Symbol{CosPoly{1.0, -1.0}}), symbol_error);
    CHECK_THROWS_AS((void)Projector::from_symbol(8, Symbol{CosPoly{0.0, 0.0, 1.0}}), symbol_error);
}

TEST_CASE("coarse operator of the corrected order-two problem") {
    const int m = 16;
    Symbol f0 = strang_correct(CosPoly{2.0, -2.0}, m);
    auto A = Dct3Operator::from_symbol(m, f0);
    auto P = Projector::from_symbol(m, Symbol{CosPoly{2.0, 2.0}});
    auto Ac = coarse_operator(A, P);

    CHECK(Ac.size() == 8);
    CHECK(Ac.symbol().poly[0] == doctest::Approx(5.0));
    CHECK(Ac.symbol().poly[1] == doctest::Approx(-4.0));
    CHECK(Ac.symbol().poly[2] == doctest::Approx(-1.0));
    CHECK(Ac.symbol().mass == doctest::Approx(16.0 * f0.mass));

    Eigen::MatrixXd want = oracle::galerkin_dense(oracle::dense_projector(m, P.p()),
                                                  oracle::dense_operator(m, f0));
    CHECK((Ac.materialize_dense() - want).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("symbolic coarsening equals the dense triple product") {
    for (int m : {8, 16, 32, 64}) {
        for (ZeroLoc loc : {ZeroLoc::zero, ZeroLoc::pi}) {
            for (int q = 1; q <= 3; ++q) {
                if (loc == ZeroLoc::pi && q > 1) continue;
                Symbol f = level0_symbol(loc, q, m);
                const ZeroInfo z{loc, 2 * q};
                Symbol p = projector_poly(z, auto_order(z), m);
                Symbol fc = galerkin_symbol(f, p);
                Eigen::MatrixXd want = oracle::galerkin_dense(oracle::dense_projector(m, p),
                                                              oracle::dense_operator(m, f));
                const double scale = std::max(1.0, want.cwiseAbs().maxCoeff());
                CHECK((oracle::dense_spectral(m / 2, fc) - want).cwiseAbs().maxCoeff() <=
                      1e-10 * scale);
            }
        }
    }
}

TEST_CASE("identity stays the identity under p = 1") {
    auto A = Dct3Operator::from_symbol(16, Symbol{CosPoly{1.0}});
    auto P = Projector::from_symbol(16, Symbol{CosPoly{1.0}});
    auto Ac = coarse_operator(A, P);
    CHECK(Ac.symbol().poly.degree() == 0);
    CHECK(Ac.symbol().poly[0] == doctest::Approx(1.0));
    CHECK(Ac.symbol().mass == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("separable coarsening equals the dense triple product in 2D") {
    const int m = 8;
    for (ZeroLoc loc : {ZeroLoc::zero, ZeroLoc::pi}) {
        for (int q = 1; q <= 2; ++q) {
            if (loc == ZeroLoc::pi && q > 1) continue;
            TensorSymbol f = problem_symbol_2d(loc, q);
            if (loc == ZeroLoc::zero) {
                const double c0 = eval(pow_poly(CosPoly{2.0, -2.0}, q), kPi / m);
                f.terms.push_back({Symbol{CosPoly{0.0}, c0}, Symbol{CosPoly{0.0}, 1.0}});
            }
            const ZeroInfo z{loc, 2 * q};
            Symbol p = projector_poly(z, auto_order(z), m);

            auto A = Dct3Operator2D::from_symbol(m, f);
            auto P = Projector2D::from_symbols(m, p, p);
            auto Ac = coarse_operator(A, P);

            Eigen::MatrixXd Pd = oracle::dense_projector_2d(m, p, p);
            Eigen::MatrixXd want = oracle::galerkin_dense(Pd, oracle::dense_operator_2d(m, f));
            const double scale = std::max(1.0, want.cwiseAbs().maxCoeff());
            CHECK((Ac.materialize_dense() - want).cwiseAbs().maxCoeff() <= 1e-10 * scale);
        }
    }
}

TEST_CASE("2D restriction matches the Kronecker dense projector") {
    const int m = 8;
    Symbol p{CosPoly{2.0, 2.0}};
    auto P = Projector2D::from_symbols(m, p, p);
    auto v = random_vec(static_cast<std::size_t>(m) * m, 31);
    auto w = P.restrict_vec(v);
    Eigen::VectorXd want = oracle::dense_projector_2d(m, p, p) * oracle::to_eigen(v);
    REQUIRE(w.size() == static_cast<std::size_t>(m / 2) * (m / 2));
    for (Eigen::Index i = 0; i < want.size(); ++i)
        CHECK(w[static_cast<std::size_t>(i)] == doctest::Approx(want(i)).epsilon(1e-11).scale(1.0));

    auto wc = random_vec(static_cast<std::size_t>(m / 2) * (m / 2), 32);
    auto back = P.prolong(wc);
    Eigen::VectorXd want2 =
        oracle::dense_projector_2d(m, p, p).transpose() * oracle::to_eigen(wc);
    for (Eigen::Index i = 0; i < want2.size(); ++i)
        CHECK(back[static_cast<std::size_t>(i)] ==
              doctest::Approx(want2(i)).epsilon(1e-11).scale(1.0));
}

TEST_CASE("grid-symbol coarsening handles non-separable projectors") {
    const int m = 8;
    CosPoly u{2.0, -2.0};
    CosPoly pu{2.0, 2.0};
    Symbol2 f2{add(outer(u, CosPoly{1.0}), outer(CosPoly{1.0}, u)), 0.25};
    Symbol2 p2{add(outer(pu, CosPoly{1.0}), outer(CosPoly{1.0}, pu)), 0.0};

    Symbol2 coarse = galerkin_symbol(f2, p2);

    Eigen::MatrixXd T2 = oracle::kron(oracle::dense_cut(m), oracle::dense_cut(m));
    Eigen::MatrixXd Pd = T2 * oracle::dense_operator_grid(m, p2);
    Eigen::MatrixXd want = oracle::galerkin_dense(Pd, oracle::dense_operator_grid(m, f2));
    Eigen::MatrixXd got = oracle::dense_operator_grid(m / 2, coarse);
    const double scale = std::max(1.0, want.cwiseAbs().maxCoeff());
    CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-9 * scale);
}

TEST_CASE("coarse-grid correction is a projection and A-orthogonal") {
    for (int m : {8, 16, 32}) {
        Symbol f = level0_symbol(ZeroLoc::zero, 1, m);
        Symbol p = projector_poly(ZeroInfo{ZeroLoc::zero, 2}, 1, m);
        Eigen::MatrixXd A = oracle::dense_operator(m, f);
        Eigen::MatrixXd P = oracle::dense_projector(m, p);
        Eigen::MatrixXd Ac = P * A * P.transpose();
        Eigen::MatrixXd W = Eigen::MatrixXd::Identity(m, m) - P.transpose() * Ac.ldlt().solve(P * A);

        CHECK((W * W - W).cwiseAbs().maxCoeff() <= 1e-9);

        Eigen::MatrixXd AW = A * W;
        CHECK((AW - AW.transpose()).cwiseAbs().maxCoeff() <= 1e-9);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (AW + AW.transpose()));
        CHECK(es.eigenvalues().minCoeff() >= -1e-9);
    }
}
