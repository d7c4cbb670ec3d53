#include <benchmark/benchmark.h>

#include "chroma/annulus.hpp"
#include "chroma/eightcol.hpp"
#include "chroma/hexcolor.hpp"

namespace {

using namespace chroma;

void BM_RadialMaxB(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(annulus::radial_max_b(8, 16));
}
BENCHMARK(BM_RadialMaxB);

void BM_AnnulusBounds(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(annulus::annulus_bounds_rows());
}
BENCHMARK(BM_AnnulusBounds);

void BM_ParetoSchemes(benchmark::State& state) {
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hex::pareto_schemes(10, 10, threads));
}
BENCHMARK(BM_ParetoSchemes)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SchemeCatalog(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hex::SchemeCatalog(10));
}
BENCHMARK(BM_SchemeCatalog)->Unit(benchmark::kMillisecond);

void BM_EightMaximize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(eight::maximize_b(1e-6));
}
BENCHMARK(BM_EightMaximize)->Unit(benchmark::kMillisecond);

}  // namespace
