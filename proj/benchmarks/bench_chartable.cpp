#include <benchmark/benchmark.h>

#include "langfib/gl2chars.hpp"

using namespace langfib;

namespace {

void bm_character_table(benchmark::State& state, GroupKind kind, int prime, int s) {
    const BigField& tower = tower_for_prime(prime);
    for (auto _ : state) {
        auto t = character_table(kind, s, tower);
        benchmark::DoNotOptimize(t.col_error);
    }
}

void bm_shintani_classes(benchmark::State& state, GroupKind kind, int prime, int s) {
    const BigField& tower = tower_for_prime(prime);
    const GroupData g = build_group(kind, s, tower);
    const int q = prime == 2 ? (s == 4 ? 2 : 4) : 3;
    for (auto _ : state) {
        int resolved = 0;
        for (int c = 0; c < static_cast<int>(g.classes.size()); ++c)
            if (shintani_class(g, c, tower, q).cls >= 0) ++resolved;
        benchmark::DoNotOptimize(resolved);
    }
}

void bm_theorem_report(benchmark::State& state, int q, GroupKind kind) {
    for (auto _ : state) {
        auto r = verify_theorem1(q, kind);
        benchmark::DoNotOptimize(r.aggregate_ok);
    }
}

}  // namespace

BENCHMARK_CAPTURE(bm_character_table, GL2_F9, GroupKind::GL2, 3, 9);
BENCHMARK_CAPTURE(bm_character_table, SL2_F9, GroupKind::SL2, 3, 9);
BENCHMARK_CAPTURE(bm_character_table, GL2_F16, GroupKind::GL2, 2, 16);
BENCHMARK_CAPTURE(bm_shintani_classes, GL2_F9, GroupKind::GL2, 3, 9);
BENCHMARK_CAPTURE(bm_theorem_report, GL2_q3, 3, GroupKind::GL2);
