#include <benchmark/benchmark.h>

#include "mixtran/dataset.hpp"
#include "mixtran/engine.hpp"
#include "mixtran/lane_index.hpp"

using namespace mixtran;

namespace {

// one shared desk-scale instance so every search benchmark sees the same data
const Dataset& instance() {
  static const Dataset ds = generate_synthetic(300, 1200, 31, 400.0, 300.0);
  return ds;
}

const LaneIndex& instance_index() {
  static const LaneIndex index(instance());
  return index;
}

double r_from_arg(const benchmark::State& state) {
  return static_cast<double>(state.range(0)) / 100.0;
}

void BM_PlanarDistance(benchmark::State& state) {
  const MetricProvider& m = instance().metric;
  std::uint32_t a = 0, b = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m(a, b));
    a = (a + 7) % 300;
    b = (b + 13) % 300;
  }
}
BENCHMARK(BM_PlanarDistance);

void BM_HaversineDistance(benchmark::State& state) {
  static const Dataset geo = [] {
    Dataset ds;
    for (int i = 0; i < 64; ++i)
      ds.bases.push_back(Base{"g" + std::to_string(i), -40.0 + i, 10.0 + 2.0 * i});
    ds.metric = MetricProvider::spherical(ds.bases);
    return ds;
  }();
  std::uint32_t a = 0, b = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geo.metric(a, b));
    a = (a + 7) % 64;
    b = (b + 13) % 64;
  }
}
BENCHMARK(BM_HaversineDistance);

void BM_BuildIndex(benchmark::State& state) {
  const Dataset& ds = instance();
  for (auto _ : state) {
    LaneIndex index(ds);
    benchmark::DoNotOptimize(index.start_bases().size());
  }
}
BENCHMARK(BM_BuildIndex);

void BM_BruteForce(benchmark::State& state) {
  const LaneIndex& index = instance_index();
  const double r = r_from_arg(state);
  std::uint32_t t1 = 0;
  std::size_t results = 0;
  for (auto _ : state) {
    results += brute_force_enumerate(index, t1, r).size();
    t1 = (t1 + 1) % static_cast<std::uint32_t>(index.lane_count());
  }
  benchmark::DoNotOptimize(results);
}
BENCHMARK(BM_BruteForce)->Arg(40)->Arg(50)->Arg(60);

void BM_Pruned(benchmark::State& state) {
  const LaneIndex& index = instance_index();
  const double r = r_from_arg(state);
  std::uint32_t t1 = 0;
  std::size_t results = 0;
  for (auto _ : state) {
    results += pruned_enumerate(index, t1, r).size();
    t1 = (t1 + 1) % static_cast<std::uint32_t>(index.lane_count());
  }
  benchmark::DoNotOptimize(results);
}
BENCHMARK(BM_Pruned)->Arg(40)->Arg(50)->Arg(60);

void BM_Topk(benchmark::State& state) {
  const LaneIndex& index = instance_index();
  const double r = r_from_arg(state);
  std::uint32_t t1 = 0;
  std::size_t results = 0;
  for (auto _ : state) {
    results += topk_enumerate(index, t1, r, 10).size();
    t1 = (t1 + 1) % static_cast<std::uint32_t>(index.lane_count());
  }
  benchmark::DoNotOptimize(results);
}
BENCHMARK(BM_Topk)->Arg(40)->Arg(50)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
