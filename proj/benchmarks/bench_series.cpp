#include <benchmark/benchmark.h>

#include "semicurve/series.hpp"

using namespace semicurve;

namespace {

ValueSemigroup tacnode_semigroup() {
    // S = {(0,0), (1,1)} union ((2,2) + N^2)
    std::vector<Expo> pts = {{0, 0}, {1, 1}, {2, 2}};
    return ValueSemigroup::validate(2, {2, 2}, pts);
}

void bm_ell_sweep(benchmark::State& state) {
    SemigroupProvider p(tacnode_semigroup());
    long long b = state.range(0);
    for (auto _ : state) {
        long long acc = 0;
        for_each_point(expo_zero(2), expo_const(2, b),
                       [&](const Expo& v) { acc += p.semigroup().ell(v); });
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_ell_sweep)->Arg(4)->Arg(8);

void bm_p_prime(benchmark::State& state) {
    SemigroupProvider p(tacnode_semigroup());
    for (auto _ : state) {
        IntPoly pp = poly_P_prime(p);
        benchmark::DoNotOptimize(pp);
    }
}
BENCHMARK(bm_p_prime);

void bm_c_chain(benchmark::State& state) {
    ValueSemigroup s = tacnode_semigroup();
    for (auto _ : state) {
        long long acc = 0;
        for_each_point(expo_const(2, -1), expo_const(2, 3),
                       [&](const Expo& v) { acc += s.c_chain(v); });
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(bm_c_chain);

}  // namespace

BENCHMARK_MAIN();
