#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vfc/graph.h"

namespace vfc::tools {

struct BenchOptions {
  int dstar = 4;
  std::vector<int> fail_sizes;  // empty: build row only
  int updates_per_size = 5;
  int queries_per_update = 10000;
  std::uint64_t seed = 42;
};

// Tab-separated rows with a header:
//   phase n m d wall_ms type1 type2 la_queries max_work
// One build row, then per failure size an update row (mean over the
// updates, max counters) and a query row (mean time per batch).
void RunBench(const RawGraph& graph, const BenchOptions& options, std::ostream& out);

}  // namespace vfc::tools
