#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dct3mg/analysis.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace dct3mg;

namespace {
const double kPi = std::acos(-1.0);

Hierarchy1D model_hierarchy(ZeroLoc loc, int q, int m0) {
    return build_hierarchy_1d(problem_symbol_1d(loc, q), ZeroInfo{loc, 2 * q}, std::nullopt, m0,
                              Method::vcycle);
}
} // namespace

TEST_CASE("smoothing constants at the reference weights") {
    const Symbol f{CosPoly{2.0, -2.0}};
    auto c = smoothing_constants(f, 0.25);
    CHECK(c.beta == doctest::Approx(0.25));
    CHECK(c.alpha == doctest::Approx(0.5));

    CHECK(smoothing_constants(f, 0.5).beta == doctest::Approx(0.0).scale(1.0));
    CHECK(smoothing_constants(f, 0.125).beta == doctest::Approx(0.125 * 1.5));

    CHECK_THROWS_AS((void)smoothing_constants(f, 0.6), std::invalid_argument);
    CHECK_THROWS_AS((void)smoothing_constants(f, 0.0), std::invalid_argument);
}

TEST_CASE("constant symbols have unit conditioning") {
    auto st = psi_stats(CosPoly{1.0});
    CHECK(st.M == doctest::Approx(1.0));
    CHECK(st.m == doctest::Approx(1.0));
    CHECK(st.mu_inf == doctest::Approx(1.0));
    CHECK(st.gamma_star == doctest::Approx(1.0));
}

TEST_CASE("psi statistics across the recursion chain") {
    auto s0 = psi_stats(CosPoly{2.0});
    CHECK(s0.gamma_star == doctest::Approx(0.5));
    CHECK(s0.mu_inf == doctest::Approx(1.0));

    auto s1 = psi_stats(CosPoly{1.5, 0.5});
    CHECK(s1.M == doctest::Approx(2.0));
    CHECK(s1.m == doctest::Approx(1.0));
    CHECK(s1.gamma_star == doctest::Approx(2.0));

    auto slim = psi_stats(CosPoly{4.0 / 3, 2.0 / 3});
    CHECK(slim.M == doctest::Approx(2.0));
    CHECK(slim.m == doctest::Approx(2.0 / 3));
    CHECK(slim.mu_inf == doctest::Approx(3.0));
    CHECK(slim.gamma_star == doctest::Approx(4.5));

    CHECK_THROWS_AS((void)psi_stats(CosPoly{1.0, -1.5}), symbol_error);
}

TEST_CASE("approximation constant of the model problem") {
    CHECK(approx_constant(Symbol{CosPoly{2.0, -2.0}}, 1) == doctest::Approx(0.5));
    CHECK(approx_constant(Symbol{CosPoly{5.0, -4.0, -1.0}}, 1) == doctest::Approx(0.5));
}

TEST_CASE("levelwise constants of the order-two chain") {
    auto h = model_hierarchy(ZeroLoc::zero, 1, 128);
    auto rep = levelwise_delta(h);
    REQUIRE(rep.levels.size() == h.levels.size() - 1);

    CHECK(rep.levels[0].mu_inf == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rep.levels[1].mu_inf == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(rep.levels[2].mu_inf == doctest::Approx(8.0 / 3).epsilon(1e-6));
    CHECK(rep.mu_increments_ok);

    CHECK(rep.delta_pre == 0.0);
    CHECK(rep.delta_post > 0.0);
    CHECK(rep.delta_post <= 1.0);
    CHECK(rep.bound == doctest::Approx(std::sqrt(1.0 - rep.delta_post)));
    CHECK(rep.bound < 1.0);
    CHECK(!rep.rho_hat.has_value());

    auto both = levelwise_delta(h, true);
    CHECK(both.delta_pre == 0.0);
    CHECK(both.bound == doctest::Approx(rep.bound));

    Hierarchy1D gentle = model_hierarchy(ZeroLoc::zero, 1, 128);
    for (auto& L : gentle.levels) L.omega_pre = 0.5 * L.omega_post;
    auto damped = levelwise_delta(gentle, true);
    CHECK(damped.delta_pre > 0.0);
    CHECK(damped.bound < rep.bound);
}

TEST_CASE("levelwise constants handle a mirror-zero finest level") {
    auto h = model_hierarchy(ZeroLoc::pi, 1, 128);
    auto rep = levelwise_delta(h);
    REQUIRE(!rep.levels.empty());
    CHECK(rep.levels[0].q == 1);
    for (const auto& lc : rep.levels) {
        CHECK(lc.gamma_star > 0.0);
        CHECK(lc.m_psi > 0.0);
    }
    CHECK(rep.delta_post > 0.0);
    CHECK(rep.bound < 1.0);
}

TEST_CASE("levelwise constants need at least one coarsening") {
    auto h = model_hierarchy(ZeroLoc::zero, 1, 16);
    CHECK_THROWS_AS((void)levelwise_delta(h), std::invalid_argument);
}

TEST_CASE("measured contraction is below one and stable in size") {
    double prev = -1.0;
    for (int m : {32, 64}) {
        auto h = model_hierarchy(ZeroLoc::zero, 1, m);
        const double rho = measured_contraction(h);
        CHECK(rho > 0.0);
        CHECK(rho < 1.0);
        if (prev >= 0.0) CHECK(std::abs(rho - prev) <= 0.05);
        prev = rho;
    }
}

TEST_CASE("measured contraction respects the theoretical bound") {
    auto h = model_hierarchy(ZeroLoc::zero, 1, 64);
    const double rho = measured_contraction(h);
    const auto rep = levelwise_delta(h);
    CHECK(rho <= rep.bound + 0.02);
}

TEST_CASE("an identity fine level is annihilated by the post-smoother") {
    Hierarchy1D h;
    const Symbol one{CosPoly{1.0}};
    Level1D fine;
    fine.m = 16;
    fine.f = one;
    fine.A = Dct3Operator::from_symbol(16, one);
    fine.P = Projector::from_symbol(16, one);
    fine.omega_pre = 2.0;
    fine.omega_post = 1.0;
    fine.r = 1;
    Level1D coarse;
    coarse.m = 8;
    coarse.f = galerkin_symbol(one, one);
    coarse.A = Dct3Operator::from_symbol(8, coarse.f);
    coarse.omega_pre = 2.0 / sup_norm(coarse.f);
    coarse.omega_post = 1.0 / sup_norm(coarse.f);
    h.levels.push_back(std::move(fine));
    h.levels.push_back(std::move(coarse));
    h.coarse = CoarseSolve1D::build(h.levels.back().A);

    CHECK(measured_contraction(h) <= 1e-10);
}

TEST_CASE("measured contraction enforces its size cap") {
    auto h = model_hierarchy(ZeroLoc::zero, 1, 512);
    CHECK_THROWS_AS((void)measured_contraction(h), std::invalid_argument);
}

TEST_CASE("cutting identity holds densely") {
    for (int m = 2; m <= 512; m *= 2) CHECK(verify_cutting_identity(m) <= 1e-12);
    for (int m : {6, 10, 100, 500}) CHECK(verify_cutting_identity(m) <= 1e-12);
    CHECK_THROWS_AS((void)verify_cutting_identity(7), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_cutting_identity(1024), std::invalid_argument);
}

TEST_CASE("cutting weights at m = 4") {
    const Eigen::MatrixXd D = oracle::dense_cut(4) * oracle::dense_basis(4);
    const Eigen::MatrixXd Qc = oracle::dense_basis(2);
    CHECK((D.col(0) - Qc.col(0)).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((D.col(1) - std::cos(kPi / 8) * Qc.col(1)).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(D.col(2).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("constant columns restrict with unit weight across sizes") {
    for (int m : {8, 64, 256}) {
        const Eigen::MatrixXd D = oracle::dense_cut(m) * oracle::dense_basis(m);
        const Eigen::MatrixXd Qc = oracle::dense_basis(m / 2);
        CHECK((D.col(1) - std::cos(kPi / (2 * m)) * Qc.col(1)).cwiseAbs().maxCoeff() <= 1e-13);
        CHECK((D.col(0) - Qc.col(0)).cwiseAbs().maxCoeff() <= 1e-13);
    }
}
