#include <benchmark/benchmark.h>

#include "luka/genfun.hpp"
#include "luka/qarea.hpp"

using namespace luka;

static void BM_SeriesR(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(series_R(ModelParams::finite(2, 4), order));
}
BENCHMARK(BM_SeriesR)->Arg(8)->Arg(12)->Arg(16);

static void BM_SeriesRQ(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(r_series_q(ModelParams::unbounded(0), order));
}
BENCHMARK(BM_SeriesRQ)->Arg(6)->Arg(8)->Arg(10);

static void BM_CTable(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(c_table(ModelParams::unbounded(0), order));
}
BENCHMARK(BM_CTable)->Arg(12)->Arg(16);
