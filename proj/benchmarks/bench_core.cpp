#include "dct3mg/solver.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace dct3mg;

namespace {

Hierarchy1D hierarchy_1d(int m) {
    return build_hierarchy_1d(problem_symbol_1d(ZeroLoc::zero, 1), ZeroInfo{ZeroLoc::zero, 2}, 1, m,
                              Method::vcycle);
}

void BM_Matvec1D(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto A = Dct3Operator::from_symbol(m, strang_correct(CosPoly{2.0, -2.0}, m));
    std::vector<double> x = uniform_01(static_cast<std::size_t>(m), 3);
    std::vector<double> y(x.size());
    for (auto _ : state) {
        A.matvec(x.data(), y.data());
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(BM_Matvec1D)->RangeMultiplier(4)->Range(256, 16384);

void BM_Matvec2D(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto A = Dct3Operator2D::from_symbol(m, problem_symbol_2d(ZeroLoc::pi, 1));
    std::vector<double> x = uniform_01(static_cast<std::size_t>(m) * m, 3);
    std::vector<double> y(x.size());
    for (auto _ : state) {
        A.matvec(x.data(), y.data());
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * m * m);
}
BENCHMARK(BM_Matvec2D)->RangeMultiplier(2)->Range(64, 512);

void BM_VcycleIteration(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Hierarchy1D h = hierarchy_1d(m);
    const std::vector<double> b = make_rhs(h, RhsMode::random_solution, 42);
    std::vector<double> x(b.size(), 0.0);
    SolveOptions opts;
    for (auto _ : state) {
        apply_cycle(h, x, b, opts);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(BM_VcycleIteration)->RangeMultiplier(4)->Range(256, 16384);

void BM_Setup1D(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Hierarchy1D h = hierarchy_1d(m);
        benchmark::DoNotOptimize(h.levels.data());
    }
}
BENCHMARK(BM_Setup1D)->RangeMultiplier(4)->Range(256, 4096);

} // namespace

BENCHMARK_MAIN();
