#include <benchmark/benchmark.h>

#include <complex>

#include "bicalo/bianchi.hpp"
#include "bicalo/small.hpp"
#include "bicalo/verify.hpp"

using namespace bicalo;

namespace {

const GridDomain kGrid64{0.5, 2.0, 0.0, 6.283185307179586, 64, 64};

void BM_Parse(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse("exp(tau^2)/(tau^3+tau)-log(tau)"));
    }
}
BENCHMARK(BM_Parse);

void BM_EvalJet(benchmark::State& state) {
    const HoloExpr e = parse("tau^3+tau");
    const Complex t{1.1, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_jet(e, t));
    }
}
BENCHMARK(BM_EvalJet);

void BM_BianchiPoint(benchmark::State& state) {
    const HoloExpr e = parse("tau^2");
    const Complex t{1.1, 0.4};
    const Jet2 fj = eval_jet(e, t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bianchi_calo_point(fj, t));
    }
}
BENCHMARK(BM_BianchiPoint);

void BM_SmallPoint(benchmark::State& state) {
    const HoloExpr e = parse("tau^2");
    const Complex t{1.1, 0.4};
    const Jet2 fj = eval_jet(e, t);
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_upper_half_space(small_matrix(fj, t)));
    }
}
BENCHMARK(BM_SmallPoint);

void BM_Grid64(benchmark::State& state) {
    const HoloExpr e = parse("tau^2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(bicalo_grid(e, kGrid64));
    }
}
BENCHMARK(BM_Grid64);

void BM_VerifyGrid64(benchmark::State& state) {
    const SurfaceGrid g = bicalo_grid(parse("tau^2"), {0.9, 1.5, 0.3, 0.8, 64, 64});
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_grid(g));
    }
}
BENCHMARK(BM_VerifyGrid64);

}  // namespace

BENCHMARK_MAIN();
