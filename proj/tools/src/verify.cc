#include "vfc/tools/verify.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "vfc/brute.h"
#include "vfc/errors.h"
#include "vfc/index.h"
#include "vfc/tools/generator.h"

namespace vfc::tools {
namespace {

std::size_t Type1Budget(std::size_t d) { return 2 * d * d; }
std::size_t Type2Budget(std::size_t d) { return 4 * d * d * d * d; }
std::size_t WorkBudget(std::size_t d) { return 10 * d + 10; }

brute::EdgeList ToEdgeList(const RawGraph& g) {
  brute::EdgeList edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.emplace_back(u, v);
  return edges;
}

// Checks the counters of one update; returns a description or "".
std::string CheckUpdate(const FailureOracle& oracle, VerifyReport* report) {
  std::size_t d = oracle.failed().size();
  UpdateCounters c = oracle.totals();
  if (report) {
    report->max_type1 = std::max(report->max_type1, c.type1_queries);
    report->max_type2 = std::max(report->max_type2, c.type2_queries);
  }
  std::ostringstream msg;
  if (c.type1_queries > Type1Budget(d)) {
    msg << "type-1 range queries " << c.type1_queries << " > " << Type1Budget(d);
  } else if (c.type2_queries > Type2Budget(d)) {
    msg << "type-2 range queries " << c.type2_queries << " > " << Type2Budget(d);
  }
  return msg.str();
}

std::string CheckQuery(const FailureOracle& oracle, NodeId x, NodeId y, bool expected,
                       bool inject_fault, VerifyReport* report) {
  QueryTrace trace;
  bool got = oracle.Connected(x, y, &trace);
  if (inject_fault) got = !got;
  std::size_t d = oracle.failed().size();
  if (report) report->max_work = std::max(report->max_work, trace.work);
  std::ostringstream msg;
  if (got != expected) {
    msg << "query(" << x + 1 << ", " << y + 1 << ") = " << got << ", BFS says " << expected;
  } else if (trace.work > WorkBudget(d)) {
    msg << "query work " << trace.work << " > " << WorkBudget(d);
  }
  return msg.str();
}

// Rebuilds everything for one repro and reports the first problem.
std::string Evaluate(const Repro& r, bool inject_fault) {
  try {
    Index index = Index::Build(Normalize(r.graph), r.dstar);
    std::vector<NodeId> failed;
    for (NodeId f : r.failed) failed.push_back(f - 1);
    FailureOracle oracle = index.Update(failed);
    std::string problem = CheckUpdate(oracle, nullptr);
    if (!problem.empty()) return problem;
    std::vector<int> dead(r.failed.begin(), r.failed.end());
    bool expected = brute::Connected(r.graph.n, ToEdgeList(r.graph), dead, r.x, r.y, 1);
    return CheckQuery(oracle, r.x - 1, r.y - 1, expected, inject_fault, nullptr);
  } catch (const Error& e) {
    return std::string("exception: ") + e.what();
  }
}

// Greedy one-at-a-time deletion of failed vertices and edges while the
// problem persists.
Repro Shrink(Repro r, bool inject_fault) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < r.failed.size();) {
      Repro next = r;
      next.failed.erase(next.failed.begin() + i);
      if (!Evaluate(next, inject_fault).empty()) {
        r = std::move(next);
        changed = true;
      } else {
        ++i;
      }
    }
    for (std::size_t i = 0; i < r.graph.edges.size();) {
      Repro next = r;
      next.graph.edges.erase(next.graph.edges.begin() + i);
      if (!Evaluate(next, inject_fault).empty()) {
        r = std::move(next);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return r;
}

std::vector<NodeId> RandomFailedSet(Rng& rng, NodeId n, int size, NodeId must_include) {
  std::vector<NodeId> all(n);
  for (NodeId v = 0; v < n; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<NodeId>(size, n));
  if (must_include >= 0 && size > 0 &&
      std::find(all.begin(), all.end(), must_include) == all.end()) {
    all.back() = must_include;
  }
  return all;
}

// Failed vertices drawn from one root path of component 0, which makes
// nested failures and many hanging subtrees likely.
std::vector<NodeId> ChainFailedSet(Rng& rng, const Index& index, int size) {
  const DfsTree& t = index.component(0).tree();
  Vertex v = std::uniform_int_distribution<Vertex>(1, t.n())(rng);
  std::vector<NodeId> path;
  for (; v != kNil; v = t.parent(v)) path.push_back(index.node(0, v));
  std::shuffle(path.begin(), path.end(), rng);
  path.resize(std::min<std::size_t>(path.size(), size));
  return path;
}

}  // namespace

std::string FormatRepro(const Repro& r) {
  std::ostringstream out;
  out << "# dstar " << r.dstar << "\n# U";
  for (NodeId f : r.failed) out << ' ' << f;
  out << "\n# Q " << r.x << ' ' << r.y << '\n' << FormatGraph(r.graph);
  return out.str();
}

VerifyReport RunVerify(const VerifyOptions& opt) {
  VerifyReport report;
  for (int t = 0; t < opt.trials && report.ok; ++t) {
    std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(t)};
    Rng rng(seq);
    RawGraph raw = CorpusGraph(rng, std::min(opt.min_n, opt.max_n), opt.max_n);
    int dstar = std::uniform_int_distribution<int>(1, std::max(1, opt.max_dstar))(rng);
    Index index = Index::Build(Normalize(raw), dstar);
    brute::EdgeList edges = ToEdgeList(raw);
    NodeId root = index.node(0, 1);
    ++report.instances;

    for (int s = 0; s < opt.sets_per_graph && report.ok; ++s) {
      int size = std::uniform_int_distribution<int>(0, dstar)(rng);
      std::vector<NodeId> failed = s % 4 == 1
                                       ? ChainFailedSet(rng, index, size)
                                       : RandomFailedSet(rng, raw.n, size, s % 4 == 0 ? root : -1);
      if (std::find(failed.begin(), failed.end(), root) != failed.end()) ++report.sets_with_root;
      ++report.failure_sets;

      Repro repro{raw, dstar, {}, 1, 1};
      for (NodeId f : failed) repro.failed.push_back(f + 1);
      std::vector<int> dead(repro.failed.begin(), repro.failed.end());
      std::vector<int> label = brute::ComponentLabels(raw.n, edges, dead, 1);
      std::vector<NodeId> alive;
      for (NodeId v = 0; v < raw.n; ++v) {
        if (label[v] >= 0) alive.push_back(v);
      }

      FailureOracle oracle = index.Update(failed);
      std::string problem = CheckUpdate(oracle, &report);
      if (problem.empty() && !alive.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
        for (int p = 0; p < opt.pairs_per_set && problem.empty(); ++p) {
          NodeId x = alive[pick(rng)];
          NodeId y = alive[pick(rng)];
          ++report.queries;
          problem = CheckQuery(oracle, x, y, label[x] == label[y], opt.inject_fault, &report);
          repro.x = x + 1;
          repro.y = y + 1;
        }
      }
      if (!problem.empty()) {
        report.ok = false;
        std::ostringstream msg;
        msg << "trial " << t << ", set " << s << ": " << problem;
        report.failure = msg.str();
        Repro small = Shrink(repro, opt.inject_fault);
        std::ofstream(opt.repro_path, std::ios::binary) << FormatRepro(small);
      }
    }
  }
  return report;
}

void PrintReport(const VerifyReport& r, std::ostream& out) {
  out << "instances " << r.instances << '\n'
      << "failure_sets " << r.failure_sets << '\n'
      << "failure_sets_with_root " << r.sets_with_root << '\n'
      << "queries " << r.queries << '\n'
      << "max_type1_queries " << r.max_type1 << '\n'
      << "max_type2_queries " << r.max_type2 << '\n'
      << "max_query_work " << r.max_work << '\n'
      << "result " << (r.ok ? "ok" : "FAIL") << '\n';
  if (!r.ok) out << "failure " << r.failure << '\n';
}

}  // namespace vfc::tools
