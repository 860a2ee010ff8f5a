#include <benchmark/benchmark.h>

#include "dedekind/equiv.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/pcoeff.hpp"
#include "dedekind/pipeline.hpp"

using namespace dedekind;

namespace {

void BM_EnumerateMbfs(benchmark::State& state) {
    const BaseSize m(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const LatticeIndex index = enumerate_mbfs(m);
        benchmark::DoNotOptimize(index.size());
    }
}
BENCHMARK(BM_EnumerateMbfs)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CanonicalWord(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const LatticeIndex index = enumerate_mbfs(BaseSize(m));
    const std::uint64_t word = index.word_at(index.size() / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::canonical_word64(word, m));
    }
}
BENCHMARK(BM_CanonicalWord)->Arg(5)->Arg(6);

void BM_EnumerateClasses(benchmark::State& state) {
    const BaseSize m(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const std::vector<ClassInfo> classes = enumerate_classes(m);
        benchmark::DoNotOptimize(classes.size());
    }
}
BENCHMARK(BM_EnumerateClasses)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ConnectorCount(benchmark::State& state) {
    // A mid-lattice pair with a nontrivial component structure.
    const LatticeIndex d5 = enumerate_mbfs(BaseSize(5));
    const Mbf alpha = d5.mbf_at(d5.size() / 5);
    const Mbf gamma = join(alpha, d5.mbf_at(4 * d5.size() / 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(connector_count(alpha, gamma));
    }
}
BENCHMARK(BM_ConnectorCount);

void BM_PermutationSum(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const std::vector<ClassInfo> classes = enumerate_classes(BaseSize(m));
    const Mbf alpha = classes[classes.size() / 4].rep;
    const ClassInfo& beta = classes[classes.size() / 2];
    for (auto _ : state) {
        benchmark::DoNotOptimize(permutation_sum(alpha, beta).valid_count);
    }
}
BENCHMARK(BM_PermutationSum)->Arg(4)->Arg(5);

void BM_IntervalSizeDown(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const LatticeIndex index = enumerate_mbfs(BaseSize(m));
    const Mbf alpha = index.mbf_at(2 * index.size() / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(interval_size_down(alpha));
    }
}
BENCHMARK(BM_IntervalSizeDown)->Arg(4)->Arg(5);

void BM_ComputeDirect(benchmark::State& state) {
    const BaseSize m(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_direct(m));
    }
}
BENCHMARK(BM_ComputeDirect)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ClassTotal(benchmark::State& state) {
    const BaseSize m(static_cast<int>(state.range(0)));
    PipelineOptions options;
    options.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_class_total(m, options));
    }
}
BENCHMARK(BM_ClassTotal)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
