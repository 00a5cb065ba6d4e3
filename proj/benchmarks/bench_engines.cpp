#include <benchmark/benchmark.h>

#include "lagint/engines.hpp"
#include "lagint/suite.hpp"

using namespace lagint;

namespace {

void BM_LaguerreEval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre_eval({n, 0}, x));
        x += 1e-9; // defeat memoized-input folding without changing the regime
    }
}
BENCHMARK(BM_LaguerreEval)->Arg(2)->Arg(8)->Arg(20);

void BM_ClosedForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    double s = 0.8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_form({n, k, s, 1.3}));
        s += 1e-9;
    }
}
BENCHMARK(BM_ClosedForm)->Args({2, 1})->Args({8, 4})->Args({20, 12})->Args({8, -5});

void BM_Quadrature(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const IntegralParams p{n, k, 0.8, 1.3};
    const QuadratureConfig cfg{default_node_count(p)};
    for (auto _ : state) benchmark::DoNotOptimize(quadrature_integral(p, cfg));
    state.counters["nodes"] = cfg.nodes;
}
BENCHMARK(BM_Quadrature)->Args({2, 1})->Args({8, 4})->Args({20, 12});

void BM_ResidueExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const Rational s(4, 5), t(13, 10);
    for (auto _ : state) benchmark::DoNotOptimize(residue_exact(n, k, 0, s, t));
}
BENCHMARK(BM_ResidueExact)->Args({2, 1})->Args({8, 4})->Args({20, 12});

void BM_ClosedFormExact(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const Rational s(4, 5), t(13, 10);
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_exact(n, k, s, t));
}
BENCHMARK(BM_ClosedFormExact)->Args({2, 1})->Args({8, 4})->Args({20, 12});

void BM_SuiteSerialVsParallel(benchmark::State& state) {
    SuiteConfig cfg = SuiteConfig::defaults();
    cfg.n_max = 3;
    cfg.k_min = -4;
    cfg.k_max = 4;
    cfg.random_points = 4;
    cfg.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto rep = run_suite(cfg);
        benchmark::DoNotOptimize(rep.attempted);
    }
}
BENCHMARK(BM_SuiteSerialVsParallel)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
