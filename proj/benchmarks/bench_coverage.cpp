#include <benchmark/benchmark.h>

#include "cogregion/dataset.hpp"

using namespace cogregion;

namespace {

const Dataset& sample() {
  static const Dataset d = Dataset::load(std::string(COGREGION_DATA_DIR) + "/earthquakes_sample.csv",
                                         std::string(COGREGION_DATA_DIR) + "/us-states.geojson");
  return d;
}

void BM_LoadSample(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Dataset::load(std::string(COGREGION_DATA_DIR) + "/earthquakes_sample.csv",
                                           std::string(COGREGION_DATA_DIR) + "/us-states.geojson"));
  }
}
BENCHMARK(BM_LoadSample)->Unit(benchmark::kMillisecond);

void BM_CoverageCaliforniaBox(benchmark::State& state) {
  const Dataset& d = sample();
  const auto sel = SelectionGeometry::rectangle(Rectangle(-124.5, 32.5, -114.1, 42.0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_coverage(sel, d.points, d.index, d.registry));
}
BENCHMARK(BM_CoverageCaliforniaBox)->Unit(benchmark::kMillisecond);

void BM_CoverageFreehandWest(benchmark::State& state) {
  const Dataset& d = sample();
  const std::vector<LonLat> path{{-125, 49}, {-111, 49}, {-104, 41}, {-109, 31}, {-117, 32}, {-125, 40}};
  const auto sel = SelectionGeometry::freehand(path);
  for (auto _ : state) benchmark::DoNotOptimize(compute_coverage(sel, d.points, d.index, d.registry));
}
BENCHMARK(BM_CoverageFreehandWest)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
