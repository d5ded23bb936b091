#include <benchmark/benchmark.h>

#include "resolvent/pipeline.hpp"
#include "resolvent/recurrence.hpp"

using namespace resolvent;

namespace {

XSPoly degree_n_instance(int n) {
    // x^n + x^(n-1)/3 + ... + x/3 + s; squarefree at s = 0 for the sizes used
    std::vector<Rational> desc{rat(1)};
    for (int i = 1; i < n; ++i) desc.push_back(rat(1, 3));
    return XSPoly::instance(desc);
}

void BM_SolveResolvent(benchmark::State& state) {
    XSPoly p = degree_n_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto ode = solve_resolvent(p);
        benchmark::DoNotOptimize(ode);
    }
}
BENCHMARK(BM_SolveResolvent)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_RunRecurrenceExact(benchmark::State& state) {
    XSPoly p = degree_n_instance(4);
    auto ode = shift_homogenize(solve_resolvent(p), p);
    auto rec = extract_recurrence(ode);
    auto seeds = taylor_seeds_exact(p, Rational(0));
    seeds[0] += ode.shift;
    int K = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto run = run_recurrence_exact(rec, seeds, K);
        benchmark::DoNotOptimize(run);
    }
}
BENCHMARK(BM_RunRecurrenceExact)->Arg(64)->Arg(256);

void BM_Aberth(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Complex> coeffs(n + 1, Complex(1.0, 0.0));
    for (int i = 1; i <= n; ++i) coeffs[i] = Complex(1.0 / (i + 1), 0.1 * i);
    for (auto _ : state) {
        auto res = aberth_roots(coeffs, 1e-12);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_Aberth)->Arg(4)->Arg(8)->Arg(16);

void BM_FullPipeline(benchmark::State& state) {
    RunConfig cfg;
    cfg.coeffs_desc = parse_polynomial("1 0 1 1/10");
    cfg.oracle_check = true;
    for (auto _ : state) {
        auto rep = run_pipeline(cfg);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_FullPipeline);

}  // namespace

BENCHMARK_MAIN();
