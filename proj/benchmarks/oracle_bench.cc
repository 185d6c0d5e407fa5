#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>
#include <memory>

#include "vfc/index.h"
#include "vfc/tools/generator.h"

namespace {

// Random connected graph with m = 3n, cached per n.
const vfc::Graph& GraphFor(vfc::NodeId n) {
  static std::map<vfc::NodeId, std::unique_ptr<vfc::Graph>> cache;
  auto& slot = cache[n];
  if (!slot) {
    vfc::tools::Rng rng(n);
    slot = std::make_unique<vfc::Graph>(
        vfc::Normalize(vfc::tools::RandomConnected(rng, n, 3 * static_cast<std::size_t>(n))));
  }
  return *slot;
}

const vfc::Index& IndexFor(vfc::NodeId n, int dstar) {
  static std::map<std::pair<vfc::NodeId, int>, std::unique_ptr<vfc::Index>> cache;
  auto& slot = cache[{n, dstar}];
  if (!slot) slot = std::make_unique<vfc::Index>(vfc::Index::Build(GraphFor(n), dstar));
  return *slot;
}

std::vector<vfc::NodeId> RandomFailures(vfc::tools::Rng& rng, vfc::NodeId n, int d) {
  std::uniform_int_distribution<vfc::NodeId> pick(0, n - 1);
  std::vector<vfc::NodeId> f;
  while (static_cast<int>(f.size()) < d) {
    vfc::NodeId v = pick(rng);
    if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
  }
  return f;
}

void BM_Preprocess(benchmark::State& state) {
  const vfc::Graph& g = GraphFor(static_cast<vfc::NodeId>(state.range(0)));
  const int dstar = static_cast<int>(state.range(1));
  for (auto _ : state) {
    vfc::Index index = vfc::Index::Build(g, dstar);
    benchmark::DoNotOptimize(index.n());
  }
  state.counters["m"] = static_cast<double>(g.m());
}
BENCHMARK(BM_Preprocess)
    ->ArgsProduct({{10000, 30000, 100000}, {4}})
    ->Args({100000, 1})
    ->Args({100000, 8})
    ->Unit(benchmark::kMillisecond);

void BM_Update(benchmark::State& state) {
  const vfc::NodeId n = 100000;
  const int d = static_cast<int>(state.range(0));
  const vfc::Index& index = IndexFor(n, 8);
  vfc::tools::Rng rng(d);
  std::vector<std::vector<vfc::NodeId>> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(RandomFailures(rng, n, d));
  std::size_t i = 0;
  double type1 = 0;
  double type2 = 0;
  for (auto _ : state) {
    vfc::FailureOracle oracle = index.Update(sets[i++ % sets.size()]);
    vfc::UpdateCounters c = oracle.totals();
    type1 += c.type1_queries;
    type2 += c.type2_queries;
    benchmark::DoNotOptimize(c);
  }
  state.counters["type1"] = benchmark::Counter(type1, benchmark::Counter::kAvgIterations);
  state.counters["type2"] = benchmark::Counter(type2, benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_Update)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_Query(benchmark::State& state) {
  const vfc::NodeId n = 100000;
  const int d = static_cast<int>(state.range(0));
  const vfc::Index& index = IndexFor(n, 8);
  vfc::tools::Rng rng(100 + d);
  vfc::FailureOracle oracle = index.Update(RandomFailures(rng, n, d));
  std::uniform_int_distribution<vfc::NodeId> pick(0, n - 1);
  std::vector<std::pair<vfc::NodeId, vfc::NodeId>> pairs;
  while (pairs.size() < 4096) {
    vfc::NodeId x = pick(rng), y = pick(rng);
    if (!oracle.IsFailed(x) && !oracle.IsFailed(y)) pairs.emplace_back(x, y);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    auto [x, y] = pairs[i++ & 4095];
    benchmark::DoNotOptimize(oracle.Connected(x, y));
  }
}
BENCHMARK(BM_Query)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
