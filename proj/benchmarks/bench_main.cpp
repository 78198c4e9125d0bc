#include <benchmark/benchmark.h>

#include <vgr/canon.hpp>
#include <vgr/classify.hpp>
#include <vgr/constructions.hpp>
#include <vgr/cycles.hpp>
#include <vgr/generator.hpp>

namespace {

// egr(30,3,5,1): truncation of the pentagon by K6.
vgr::Graph truncated() { return vgr::generalized_truncation(vgr::cycle_graph(5), vgr::complete_graph(6)); }

void BM_CanonicalForm(benchmark::State& state) {
    const auto g = vgr::cartesian_product(vgr::complete_graph(static_cast<int>(state.range(0))),
                                          vgr::complete_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(vgr::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(5)->Arg(6);

void BM_CanonicalFormTruncation(benchmark::State& state) {
    const auto g = truncated();
    for (auto _ : state) benchmark::DoNotOptimize(vgr::canonical_form(g));
}
BENCHMARK(BM_CanonicalFormTruncation);

void BM_VertexCycleCounts(benchmark::State& state) {
    const auto g = truncated();
    for (auto _ : state) benchmark::DoNotOptimize(vgr::vertex_cycle_counts(g, 5));
}
BENCHMARK(BM_VertexCycleCounts);

void BM_Classify(benchmark::State& state) {
    const auto g = truncated();
    for (auto _ : state) benchmark::DoNotOptimize(vgr::classify(g));
}
BENCHMARK(BM_Classify);

void BM_Generate(benchmark::State& state, int v, int k, int g, int lambda) {
    for (auto _ : state) benchmark::DoNotOptimize(vgr::generate_all(v, k, g, lambda));
}
BENCHMARK_CAPTURE(BM_Generate, petersen, 10, 3, 5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Generate, v12_k3_g4_l2, 12, 3, 4, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Generate, v12_k3_g3_l1, 12, 3, 3, 1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
