#include "bpu/invariants.h"
#include "bpu/linalg.h"
#include "bpu/spectral.h"
#include "bpu/symfun.h"
#include "bpu/topology.h"

#include <benchmark/benchmark.h>

using namespace bpu;

static void BM_AlphaSum(benchmark::State& state)
{
    const auto p = state.range(0);
    const int blocks = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_sum_image(p, blocks));
}
BENCHMARK(BM_AlphaSum)->Args({3, 1})->Args({3, 2})->Args({5, 1})->Unit(benchmark::kMillisecond);

static void BM_MuiPresentation(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_mui_presentation(3, d));
}
BENCHMARK(BM_MuiPresentation)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_InvariantSubspace(benchmark::State& state)
{
    auto action = sl2_action(3, static_cast<int>(state.range(1)));
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(invariant_subspace(action, d));
}
BENCHMARK(BM_InvariantSubspace)->Args({24, 1})->Args({40, 1})->Args({8, 2})->Unit(benchmark::kMillisecond);

static void BM_IntegerKernelNabla(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    auto m = nabla_matrix(n, k, CoefficientRing::integers()).matrix;
    for (auto _ : state)
        benchmark::DoNotOptimize(integer_kernel(m));
}
BENCHMARK(BM_IntegerKernelNabla)->Args({9, 8})->Args({9, 12})->Args({18, 12})->Unit(benchmark::kMillisecond);

static void BM_NullspaceModP(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    auto m = nabla_matrix(n, k, CoefficientRing::integers()).matrix;
    for (auto _ : state)
        benchmark::DoNotOptimize(nullspace_mod_p(m, 3));
}
BENCHMARK(BM_NullspaceModP)->Args({9, 12})->Args({18, 18})->Unit(benchmark::kMillisecond);

static void BM_E4Identities(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_e4_identities(3, n, 10));
}
BENCHMARK(BM_E4Identities)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_Lambda(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_lambda_formula(3, 3));
}
BENCHMARK(BM_Lambda)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
