#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vfc/graph.h"

namespace vfc::tools {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 200;
  NodeId min_n = 5;
  NodeId max_n = 120;
  int max_dstar = 8;
  int sets_per_graph = 20;
  int pairs_per_set = 200;
  // Flips every oracle answer. Exercises the failure path of the harness.
  bool inject_fault = false;
  std::string repro_path = "vfc-repro.txt";
};

struct VerifyReport {
  int instances = 0;
  int failure_sets = 0;
  int sets_with_root = 0;
  std::size_t queries = 0;
  std::size_t max_type1 = 0;  // per update
  std::size_t max_type2 = 0;
  std::size_t max_work = 0;   // per query
  bool ok = true;
  std::string failure;        // empty when ok
};

// One failing check, small enough to rerun by hand. Ids are 1-based.
struct Repro {
  RawGraph graph;
  int dstar = 1;
  std::vector<NodeId> failed;
  NodeId x = 1;
  NodeId y = 1;
};

// Fuzzes the oracle against BFS on G \ F and checks the per-update and
// per-query counters against 2d^2, 4d^4 and 10d + 10 with d = |F|. Trial t
// draws from its own generator seeded with (seed, t). On the first failure
// the instance is shrunk and written to repro_path.
VerifyReport RunVerify(const VerifyOptions& options);

void PrintReport(const VerifyReport& report, std::ostream& out);

// Graph file with the failed set and query in leading comment lines.
std::string FormatRepro(const Repro& repro);

}  // namespace vfc::tools
