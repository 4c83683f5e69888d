// Microbenchmarks for the hot paths: symbolic row construction, single
// measure evaluations (cold and cached), and the exact vs. modular
// Riemann-sum routes as the level grows.
#include "tbm/integrate.hpp"
#include "tbm/polylog.hpp"

#include <benchmark/benchmark.h>

using namespace tbm;

static void BM_TwistedRow(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(twisted_bernoulli(k));
}
BENCHMARK(BM_TwistedRow)->Arg(6)->Arg(12);

static void BM_MeasureValue(benchmark::State& state) {
    MeasureSpec spec = MeasureSpec::twisted(2, BigRat(2));
    Ball ball = Ball::make(5, 3, 77);
    for (auto _ : state) benchmark::DoNotOptimize(measure_value(spec, ball));
}
BENCHMARK(BM_MeasureValue);

static void BM_MeasureValueCached(benchmark::State& state) {
    MeasureSpec spec = MeasureSpec::twisted(2, BigRat(2));
    MeasureEvaluator ev;
    Ball ball = Ball::make(5, 3, 77);
    ev.value(spec, ball);  // warm the level cache
    for (auto _ : state) benchmark::DoNotOptimize(ev.value(spec, ball));
}
BENCHMARK(BM_MeasureValueCached);

static void BM_RiemannExact(benchmark::State& state) {
    MeasureSpec spec = MeasureSpec::twisted(2, BigRat(2));
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(riemann_sum(spec, 1, Domain::Zp, 3, N));
    state.SetComplexityN(N);
}
BENCHMARK(BM_RiemannExact)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_RiemannFast(benchmark::State& state) {
    MeasureSpec spec = MeasureSpec::twisted(2, BigRat(2));
    PadicContext ctx(mpz_class(3), 14);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(riemann_sum_fast(spec, 1, Domain::Zp, 3, N, ctx));
    state.SetComplexityN(N);
}
BENCHMARK(BM_RiemannFast)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_PolylogClosed(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(padic_polylog(3, BigRat(2), 5));
}
BENCHMARK(BM_PolylogClosed);

static void BM_ZetaTriple(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(check_zeta_triple(2, 5, BigRat(2), 3, 2));
}
BENCHMARK(BM_ZetaTriple);

BENCHMARK_MAIN();
