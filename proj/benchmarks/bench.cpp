// Microbenchmarks for the hot paths: orbit search, canonicalization,
// enumeration and the assembled cohomology pipeline.

#include "crosscap/cohomology.hpp"
#include "crosscap/liftability.hpp"
#include "crosscap/surface_kernel.hpp"
#include "crosscap/tuples.hpp"

#include <benchmark/benchmark.h>

namespace {

void bm_orbit_partition(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto parts = crosscap::orbit_partition(p, 2, 3, 1);
        benchmark::DoNotOptimize(parts);
    }
}
BENCHMARK(bm_orbit_partition)->Arg(3)->Arg(5)->Arg(7);

void bm_canonical_form_unmarked(benchmark::State& state) {
    const crosscap::MarkedTuple t(13, 0, {2, 7, 11, 5, 9});
    for (auto _ : state) {
        auto canon = crosscap::canonical_form(t);
        benchmark::DoNotOptimize(canon);
    }
}
BENCHMARK(bm_canonical_form_unmarked);

void bm_enumerate_valid(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto kernels = crosscap::enumerate_valid(p, 2, 3, 1);
        benchmark::DoNotOptimize(kernels);
    }
}
BENCHMARK(bm_enumerate_valid)->Arg(5)->Arg(7)->Arg(11);

void bm_enumerate_classes(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto classes = crosscap::enumerate_classes(p, 5, 0);
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(bm_enumerate_classes)->Arg(7)->Arg(13);

void bm_farrell_pipeline(benchmark::State& state) {
    for (auto _ : state) {
        auto pattern = crosscap::farrell_pure_mcg(13, 1);
        benchmark::DoNotOptimize(pattern);
    }
}
BENCHMARK(bm_farrell_pipeline);

void bm_liftable_subgroup(benchmark::State& state) {
    for (auto _ : state) {
        auto slides = crosscap::liftable_subgroup(13);
        benchmark::DoNotOptimize(slides);
    }
}
BENCHMARK(bm_liftable_subgroup);

} // namespace

BENCHMARK_MAIN();
