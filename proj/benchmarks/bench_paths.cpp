#include <benchmark/benchmark.h>

#include "luka/paths.hpp"

using namespace luka;

static void BM_EnumerateDyck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_paths(ModelParams::finite(1, 1), n));
}
BENCHMARK(BM_EnumerateDyck)->Arg(12)->Arg(16);

static void BM_EnumerateUnbounded(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_paths(ModelParams::unbounded(0), n));
}
BENCHMARK(BM_EnumerateUnbounded)->Arg(10)->Arg(12);

static void BM_PartitionPolynomialArea(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_polynomial(ModelParams::unbounded(0), n, true));
}
BENCHMARK(BM_PartitionPolynomialArea)->Arg(8)->Arg(10);
