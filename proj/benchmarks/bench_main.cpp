#include <benchmark/benchmark.h>

#include "braidfoq/fusion.hpp"
#include "braidfoq/graded.hpp"
#include "braidfoq/presentation.hpp"
#include "braidfoq/sampling.hpp"
#include "braidfoq/verify.hpp"

using namespace braidfoq;

static void BM_CyclotomicMultiply(benchmark::State& state) {
    const FieldSpec f = FieldSpec::exact(static_cast<int>(state.range(0)));
    Rng rng(7);
    const Scalar a = random_scalar(rng, f, 5) + random_scalar(rng, f, 5);
    const Scalar b = random_scalar(rng, f, 5) + random_scalar(rng, f, 5);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(8)->Arg(24)->Arg(60)->Arg(210);

static void BM_CyclotomicInverse(benchmark::State& state) {
    const FieldSpec f = FieldSpec::exact(static_cast<int>(state.range(0)));
    Rng rng(11);
    Scalar a = Scalar::zero(f);
    while (a.is_zero()) a = random_scalar(rng, f, 5) + random_scalar(rng, f, 5);
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(8)->Arg(24)->Arg(60);

static void BM_TrivialityTable(benchmark::State& state) {
    Rng rng(3);
    SampleOptions opts;
    opts.dims = {static_cast<int>(state.range(0))};
    const OmegaData x = random_valid_instance(rng, opts);
    for (auto _ : state) benchmark::DoNotOptimize(triviality_table(x));
}
BENCHMARK(BM_TrivialityTable)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Coassociativity(benchmark::State& state) {
    const Presentation p = bosonisation_presentation(odd_instance());
    for (auto _ : state) benchmark::DoNotOptimize(coassociativity_check(p));
}
BENCHMARK(BM_Coassociativity)->Unit(benchmark::kMillisecond);

static void BM_TruncatedIdeal(benchmark::State& state) {
    const Presentation p = bosonisation_presentation(odd_instance());
    MembershipOptions opts;
    opts.bound = static_cast<int>(state.range(0));
    opts.workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        TruncatedIdeal ideal(p, opts);
        benchmark::DoNotOptimize(ideal.rank());
    }
}
BENCHMARK(BM_TruncatedIdeal)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_WellDefinedness(benchmark::State& state) {
    const Presentation p = bosonisation_presentation(odd_instance());
    for (auto _ : state) benchmark::DoNotOptimize(well_definedness_check(p, {3, MembershipOptions::kDefaultRowCap, 4}));
}
BENCHMARK(BM_WellDefinedness)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_RingChecks(benchmark::State& state) {
    const FusionContext ctx{2, Parity::Even};
    for (auto _ : state) benchmark::DoNotOptimize(ring_checks(ctx, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RingChecks)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
