#include <benchmark/benchmark.h>

#include "cogregion/query.hpp"

using namespace cogregion;

namespace {

Vocabulary vocab() {
  Vocabulary v;
  for (int i = 0; i < 50; ++i) v.region_names.push_back("region " + std::to_string(i));
  for (const char* s : {"Alabama", "Alaska", "Arizona", "Arkansas", "California", "Colorado",
                        "Connecticut", "Delaware", "Florida", "Georgia", "Hawaii", "Idaho",
                        "Illinois", "Indiana", "Iowa", "Kansas", "Kentucky", "Louisiana", "Maine",
                        "Maryland", "Massachusetts", "Michigan", "Minnesota", "Mississippi",
                        "Missouri", "Montana", "Nebraska", "Nevada", "New Hampshire", "New Jersey",
                        "New Mexico", "New York", "North Carolina", "North Dakota", "Ohio",
                        "Oklahoma", "Oregon", "Pennsylvania", "Rhode Island", "South Carolina",
                        "South Dakota", "Tennessee", "Texas", "Utah", "Vermont", "Virginia",
                        "Washington", "West Virginia", "Wisconsin", "Wyoming"}) {
    v.geography_names.push_back(s);
  }
  return v;
}

void BM_Parse(benchmark::State& state, const char* text) {
  const Vocabulary v = vocab();
  for (auto _ : state) benchmark::DoNotOptimize(parse(text, v));
}
BENCHMARK_CAPTURE(BM_Parse, widget_prefix, "large earthquakes in");
BENCHMARK_CAPTURE(BM_Parse, complete_show, "what are the recent ones in the region 42?");
BENCHMARK_CAPTURE(BM_Parse, compare, "compare the region 7 and North Carolina");
BENCHMARK_CAPTURE(BM_Parse, typing_state_name, "small earthquakes near new");

}  // namespace

BENCHMARK_MAIN();
