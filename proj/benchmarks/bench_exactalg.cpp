#include <benchmark/benchmark.h>

#include "luka/genfun.hpp"
#include "luka/phase.hpp"
#include "luka/resultant.hpp"

using namespace luka;

static void BM_DiscriminantP1(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    const MultiPoly p1 = build_P1(ModelParams::finite(1, l));
    for (auto _ : state)
        benchmark::DoNotOptimize(discriminant_monic(p1, Var::R));
}
BENCHMARK(BM_DiscriminantP1)->Arg(2)->Arg(3)->Arg(4);

static void BM_CritPolynomial(benchmark::State& state) {
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(crit_polynomial(ModelParams::finite(1, l)));
}
BENCHMARK(BM_CritPolynomial)->Arg(1)->Arg(2)->Arg(3);

static void BM_CritPolynomialGamma(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(crit_polynomial_gamma(ModelParams::finite(2, 4)));
}
BENCHMARK(BM_CritPolynomialGamma);

static void BM_CriticalPoint(benchmark::State& state) {
    const mpq_class tol = mpq_class(1) / mpz_class("1000000000000");
    for (auto _ : state)
        benchmark::DoNotOptimize(critical_point(ModelParams::finite(1, 8), tol));
}
BENCHMARK(BM_CriticalPoint);
