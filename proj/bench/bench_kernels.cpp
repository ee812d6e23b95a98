// Compares the OpenMP enumeration kernels against the serial reference
// implementation, and measures thread scaling on the counting workloads.

#include <benchmark/benchmark.h>

#include "quotdt/gen_functions.hpp"
#include "quotdt/oracle.hpp"

using namespace quotdt;

static void BM_QuotReference(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(raw_quot_count_reference(2, 2, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_QuotReference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_QuotKernel(benchmark::State& state) {
    OracleOptions o;
    o.threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(raw_quot_count(2, 2, static_cast<unsigned>(state.range(0)), o));
}
BENCHMARK(BM_QuotKernel)->Args({2, 1})->Args({3, 1})->Args({3, 0})->Args({5, 1})->Args({5, 0})
    ->Unit(benchmark::kMillisecond);

static void BM_NcquotReference(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(raw_ncquot_count_reference(1, 2, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_NcquotReference)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_NcquotKernel(benchmark::State& state) {
    OracleOptions o;
    o.threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(raw_ncquot_count(1, 2, static_cast<unsigned>(state.range(0)), o));
}
BENCHMARK(BM_NcquotKernel)->Args({2, 1})->Args({3, 1})->Args({3, 0})->Unit(benchmark::kMillisecond);

static void BM_ZAffine(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(z_affine(static_cast<unsigned>(state.range(0)), 12));
}
BENCHMARK(BM_ZAffine)->Arg(1)->Arg(4);

static void BM_PowerStructure(benchmark::State& state) {
    unsigned r = static_cast<unsigned>(state.range(0));
    MotiveSeries p = p_punctual(r, 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(power(p, TateClass::lefschetz(3)));
}
BENCHMARK(BM_PowerStructure)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
