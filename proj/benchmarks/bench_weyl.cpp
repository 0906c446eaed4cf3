#include <benchmark/benchmark.h>

#include "langfib/hermorb.hpp"
#include "langfib/rootdata.hpp"

using namespace langfib;

namespace {

void bm_weyl_enumeration(benchmark::State& state, const char* tag) {
    const auto d = build_standard(tag).datum;
    for (auto _ : state) {
        auto w = weyl_group(d);
        benchmark::DoNotOptimize(w.size());
    }
}

void bm_longest_element(benchmark::State& state, const char* tag) {
    const auto d = build_standard(tag).datum;
    for (auto _ : state) {
        auto w0 = longest_element(d);
        benchmark::DoNotOptimize(w0);
    }
}

void bm_innerform_orbits(benchmark::State& state, const char* tag) {
    const auto d = build_standard(tag).datum;
    for (auto _ : state) {
        auto t = weyl_innerform_count(d);
        benchmark::DoNotOptimize(t.total);
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_weyl_enumeration, B_3, "B_3");
BENCHMARK_CAPTURE(bm_weyl_enumeration, D_4, "D_4");
BENCHMARK_CAPTURE(bm_weyl_enumeration, A_4, "A_4");
BENCHMARK_CAPTURE(bm_longest_element, D_4, "D_4");
BENCHMARK_CAPTURE(bm_innerform_orbits, D_4, "D_4");
