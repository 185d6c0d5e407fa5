#include "vfc/tools/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <ostream>

#include "vfc/index.h"
#include "vfc/tools/generator.h"

namespace vfc::tools {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

void RunBench(const RawGraph& raw, const BenchOptions& opt, std::ostream& out) {
  Graph g = Normalize(raw);
  auto start = Clock::now();
  Index index = Index::Build(g, opt.dstar);
  double build_ms = MillisSince(start);

  out << "phase\tn\tm\td\twall_ms\ttype1\ttype2\tla_queries\tmax_work\n";
  out << "build\t" << index.n() << '\t' << index.m() << '\t' << opt.dstar << '\t' << build_ms
      << "\t0\t0\t0\t0\n";

  Rng rng(opt.seed);
  std::uniform_int_distribution<NodeId> pick(0, index.n() - 1);
  for (int d : opt.fail_sizes) {
    if (d < 0 || d > opt.dstar || d > index.n()) {
      std::cerr << "bench: skipping failure size " << d << '\n';
      continue;
    }
    double update_ms = 0;
    double query_ms = 0;
    UpdateCounters worst;
    std::size_t max_work = 0;
    std::size_t la_total = 0;
    for (int u = 0; u < opt.updates_per_size; ++u) {
      std::vector<NodeId> failed;
      while (static_cast<int>(failed.size()) < d) {
        NodeId v = pick(rng);
        if (std::find(failed.begin(), failed.end(), v) == failed.end()) failed.push_back(v);
      }
      start = Clock::now();
      FailureOracle oracle = index.Update(failed);
      update_ms += MillisSince(start);
      UpdateCounters c = oracle.totals();
      worst.type1_queries = std::max(worst.type1_queries, c.type1_queries);
      worst.type2_queries = std::max(worst.type2_queries, c.type2_queries);
      la_total += c.level_ancestor_queries;

      std::vector<std::pair<NodeId, NodeId>> pairs;
      while (static_cast<int>(pairs.size()) < opt.queries_per_update) {
        NodeId x = pick(rng);
        NodeId y = pick(rng);
        if (!oracle.IsFailed(x) && !oracle.IsFailed(y)) pairs.emplace_back(x, y);
      }
      std::size_t yes = 0;
      start = Clock::now();
      for (auto [x, y] : pairs) yes += oracle.Connected(x, y);
      query_ms += MillisSince(start);
      for (auto [x, y] : pairs) {
        QueryTrace trace;
        oracle.Connected(x, y, &trace);
        max_work = std::max(max_work, trace.work);
      }
      if (yes > pairs.size()) std::abort();  // keeps the timed loop alive
    }
    const double k = std::max(1, opt.updates_per_size);
    out << "update\t" << index.n() << '\t' << index.m() << '\t' << d << '\t' << update_ms / k
        << '\t' << worst.type1_queries << '\t' << worst.type2_queries << '\t'
        << static_cast<std::size_t>(la_total / k) << "\t0\n";
    out << "query\t" << index.n() << '\t' << index.m() << '\t' << d << '\t' << query_ms / k
        << "\t0\t0\t0\t" << max_work << '\n';
  }
}

}  // namespace vfc::tools
