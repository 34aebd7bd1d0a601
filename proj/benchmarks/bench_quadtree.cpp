#include <benchmark/benchmark.h>

#include <random>

#include "cogregion/quadtree.hpp"

using namespace cogregion;

namespace {

std::vector<LonLat> points(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> lon(-125, -65), lat(24, 50);
  std::vector<LonLat> out(n);
  for (auto& p : out) p = {lon(rng), lat(rng)};
  return out;
}

void BM_Build(benchmark::State& state) {
  const auto pts = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(QuadTree(pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Build)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_RectangleQuery(benchmark::State& state) {
  const auto pts = points(static_cast<std::size_t>(state.range(0)));
  const QuadTree tree(pts);
  const Rectangle r(-124.5, 32.5, -114.1, 42.0);
  for (auto _ : state) benchmark::DoNotOptimize(tree.query_rectangle(r));
}
BENCHMARK(BM_RectangleQuery)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_PolygonQuery(benchmark::State& state) {
  const auto pts = points(static_cast<std::size_t>(state.range(0)));
  const QuadTree tree(pts);
  const Polygon poly = Polygon::from_rings(
      {{-124, 42}, {-120, 42}, {-120, 39}, {-114.6, 35}, {-114.7, 32.7}, {-117.1, 32.5}, {-124, 40}});
  for (auto _ : state) benchmark::DoNotOptimize(tree.query_polygon(poly));
}
BENCHMARK(BM_PolygonQuery)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

}  // namespace

BENCHMARK_MAIN();
