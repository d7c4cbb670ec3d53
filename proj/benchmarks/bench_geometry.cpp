#include <benchmark/benchmark.h>

#include <random>

#include "chroma/geom.hpp"
#include "chroma/hexcolor.hpp"

namespace {

using namespace chroma;

void BM_PolygonMinDistanceHexagons(benchmark::State& state) {
    const auto& a = hex::base_tile();
    const auto b = hex::tile(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(polygon_min_distance(a, b));
}
BENCHMARK(BM_PolygonMinDistanceHexagons);

void BM_PointToTile(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> coord(-100, 100);
    std::vector<Point2> pts(4096);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(hex::point_to_tile(pts[i++ & 4095]));
}
BENCHMARK(BM_PointToTile);

void BM_ColorOfTile(benchmark::State& state) {
    const hex::HexScheme scheme(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) + 1);
    std::int64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scheme.color_of_tile(i, -3 * i));
        ++i;
    }
}
BENCHMARK(BM_ColorOfTile)->Arg(1)->Arg(5)->Arg(10);

void BM_HexBMax(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hex::hex_b_max(p, p + 1));
}
BENCHMARK(BM_HexBMax)->Arg(1)->Arg(5)->Arg(10);

}  // namespace
