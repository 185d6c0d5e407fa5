#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "vfc/graph.h"

namespace vfc::tools {

using Rng = std::mt19937_64;

// Random connected simple graph on n vertices with m edges (1-based ids).
// m is clamped to [n - 1, n(n - 1) / 2]. The spanning tree is a random
// recursive tree and labels are shuffled so DFS order is not the id order.
RawGraph RandomConnected(Rng& rng, NodeId n, std::size_t m);

// As above without the spanning tree; usually disconnected for small m.
RawGraph RandomGraph(Rng& rng, NodeId n, std::size_t m);

RawGraph Path(NodeId n);
RawGraph Cycle(NodeId n);
RawGraph Star(NodeId n);
RawGraph Grid(NodeId rows, NodeId cols);
RawGraph Complete(NodeId n);

// Mixed corpus used by verify and the acceptance runs: mostly random
// connected graphs with m <= 4n, with structured families sprinkled in.
RawGraph CorpusGraph(Rng& rng, NodeId min_n, NodeId max_n);

}  // namespace vfc::tools
