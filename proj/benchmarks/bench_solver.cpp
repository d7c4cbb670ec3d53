#include <benchmark/benchmark.h>

#include "chroma/annulus.hpp"
#include "chroma/distgraph.hpp"
#include "chroma/solver.hpp"

namespace {

using namespace chroma;

DistanceGraph config_graph(int case_index, double b, int n) {
    const double eps = default_eps(b);
    return build_graph(annulus::circle_config(case_index, b, eps, n), b, eps);
}

void BM_BuildGraphTwoCircles(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(config_graph(2, 1.48, n));
    state.SetItemsProcessed(state.iterations() * 2 * n);
}
BENCHMARK(BM_BuildGraphTwoCircles)->Arg(95)->Arg(190)->Unit(benchmark::kMicrosecond);

void BM_RefuteThreeColorsCaseOne(benchmark::State& state) {
    const auto g = config_graph(1, 1.35, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(k_colorable(g, 3));
}
BENCHMARK(BM_RefuteThreeColorsCaseOne)->Arg(65)->Arg(130)->Unit(benchmark::kMillisecond);

void BM_FourColorCaseTwoDesk(benchmark::State& state) {
    const auto g = config_graph(2, 1.48, 95);
    for (auto _ : state) benchmark::DoNotOptimize(k_colorable(g, 4));
}
BENCHMARK(BM_FourColorCaseTwoDesk)->Unit(benchmark::kMillisecond);

void BM_GreedyClique(benchmark::State& state) {
    const auto g = config_graph(2, 1.48, 190);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_clique(g.graph, 200, 0));
}
BENCHMARK(BM_GreedyClique)->Unit(benchmark::kMillisecond);

}  // namespace
