#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "langfib/cohomology.hpp"

using namespace langfib;

namespace {

// Small random involution in +-1/swap block form conjugated by shears.
IntMat random_involution(std::mt19937& rng, int n) {
    while (true) {
        IntMat d(n, n);
        int i = 0;
        while (i < n) {
            if (i + 1 < n && rng() % 3 == 0) {
                d.at(i, i + 1) = 1;
                d.at(i + 1, i) = 1;
                i += 2;
            } else {
                d.at(i, i) = (rng() % 2 == 0) ? 1 : -1;
                i += 1;
            }
        }
        IntMat p = IntMat::identity(n), pinv = IntMat::identity(n);
        for (int s = 0; s < 3; ++s) {
            int r = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
            if (r == c) continue;
            i64 t = (rng() % 2 == 0) ? 1 : -1;
            IntMat e = IntMat::identity(n), einv = IntMat::identity(n);
            e.at(r, c) = t;
            einv.at(r, c) = -t;
            p = p * e;
            pinv = einv * pinv;
        }
        IntMat a = p * d * pinv;
        if ((a * a).is_identity()) return a;
    }
}

void bm_tate_rank4(benchmark::State& state) {
    std::mt19937 rng(5);
    std::vector<CyclicModule> corpus;
    for (int i = 0; i < 64; ++i)
        corpus.push_back(CyclicModule::lattice(random_involution(rng, 4), 2));

    std::size_t k = 0;
    for (auto _ : state) {
        const auto& m = corpus[k++ % corpus.size()];
        benchmark::DoNotOptimize(tate(0, m).group.order());
        benchmark::DoNotOptimize(tate(1, m).group.order());
    }
}

void bm_tate_rank8(benchmark::State& state) {
    std::mt19937 rng(6);
    std::vector<CyclicModule> corpus;
    for (int i = 0; i < 16; ++i)
        corpus.push_back(CyclicModule::lattice(random_involution(rng, 8), 2));

    std::size_t k = 0;
    for (auto _ : state) {
        const auto& m = corpus[k++ % corpus.size()];
        benchmark::DoNotOptimize(tate(0, m).group.order());
        benchmark::DoNotOptimize(tate(1, m).group.order());
    }
}

}  // namespace

BENCHMARK(bm_tate_rank4);
BENCHMARK(bm_tate_rank8);
