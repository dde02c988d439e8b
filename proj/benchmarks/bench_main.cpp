#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "okbody/okounkov_polygon.hpp"
#include "okbody/positivity_criteria.hpp"
#include "okbody/toric_oracle.hpp"
#include "okbody/verification.hpp"
#include "okbody/zariski.hpp"

using namespace okbody;

namespace {

const SurfaceModel& model(const std::string& stem) {
  static std::map<std::string, SurfaceModel> cache;
  auto it = cache.find(stem);
  if (it == cache.end()) it = cache.emplace(stem, load_model_file(std::string(OKBODY_MODELS_DIR) + "/" + stem + ".json")).first;
  return it->second;
}

std::vector<DivisorClass> classes(const SurfaceModel& m) {
  SplitMix64 rng(42);
  return sample_big_classes(m, rng, 32, 6);
}

void BM_Zariski(benchmark::State& state, const char* stem) {
  const auto& m = model(stem);
  const auto ds = classes(m);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(zariski_decompose(m, ds[i++ % ds.size()]));
}

void BM_Polygon(benchmark::State& state, const char* stem) {
  const auto& m = model(stem);
  const auto ds = classes(m);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& d = ds[i % ds.size()];
    const auto& f = m.flags()[i % m.flags().size()];
    ++i;
    benchmark::DoNotOptimize(okounkov_polygon(m, d, f));
  }
}

void BM_SimplexConstant(benchmark::State& state) {
  const auto& m = model("dp6");
  const auto ds = classes(m);
  std::vector<Polygon> polys;
  for (const auto& d : ds) polys.push_back(okounkov_polygon(m, d, m.flags().front()));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(largest_simplex_constant(polys[i++ % polys.size()]));
}

void BM_ToricHull(benchmark::State& state) {
  const auto& m = model("dp6");
  const auto t = ToricModel::from_model(m);
  const auto d = default_ample(m);
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(valuation_hull(t, m, d, m.flag("on-E1"), level));
}

void BM_Suite(benchmark::State& state, const char* suite) {
  const auto& m = model("dp7");
  SuiteOptions opts;
  opts.classes = 4;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(m, suite, opts));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Zariski, f1, "f1");
BENCHMARK_CAPTURE(BM_Zariski, dp7, "dp7");
BENCHMARK_CAPTURE(BM_Zariski, dp6, "dp6");
BENCHMARK_CAPTURE(BM_Polygon, f1, "f1");
BENCHMARK_CAPTURE(BM_Polygon, dp7, "dp7");
BENCHMARK_CAPTURE(BM_Polygon, dp6, "dp6");
BENCHMARK(BM_SimplexConstant);
BENCHMARK(BM_ToricHull)->Arg(1)->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_Suite, theoremA, "theoremA");
BENCHMARK_CAPTURE(BM_Suite, slice, "slice");
BENCHMARK_MAIN();
