#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vfc/types.h"

namespace vfc {

// Graph as read from a file: 1-based ids, possibly with loops and repeats.
struct RawGraph {
  NodeId n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

// Compressed adjacency lists. targets[offsets[v] .. offsets[v+1]) is the
// neighbour list of v.
struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<std::int32_t> targets;

  std::span<const std::int32_t> row(std::int32_t v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

// Builds symmetric adjacency lists for the undirected edges, each list sorted
// ascending with two stable bucket-sort passes. Self-loops and repeated
// edges are dropped.
Csr BuildSortedCsr(std::int32_t num_vertices,
                   std::span<const std::pair<std::int32_t, std::int32_t>> edges);

// A simple undirected graph with 0-based ids and ascending adjacency lists.
class Graph {
 public:
  Graph() = default;

  // Endpoints are 0-based.
  static Graph FromEdges(NodeId n,
                         std::span<const std::pair<NodeId, NodeId>> edges);

  NodeId n() const { return n_; }
  std::size_t m() const { return csr_.targets.size() / 2; }
  std::span<const NodeId> neighbors(NodeId v) const { return csr_.row(v); }
  std::size_t degree(NodeId v) const {
    return csr_.offsets[v + 1] - csr_.offsets[v];
  }
  // Every edge once, as (u, v) with u < v.
  std::vector<std::pair<NodeId, NodeId>> Edges() const;

 private:
  NodeId n_ = 0;
  Csr csr_{{0}, {}};
};

// Parses "n m" followed by m lines "u v". Lines starting with '#' and blank
// lines are skipped. Throws ParseError.
RawGraph LoadGraph(std::string_view text);
RawGraph LoadGraphFile(const std::string& path);

std::string FormatGraph(const RawGraph& g);

Graph Normalize(const RawGraph& g);

struct ComponentPartition {
  std::vector<int> comp_id;          // per vertex of the input graph
  std::vector<NodeId> local_id;      // per vertex: its id inside graphs[comp]
  std::vector<std::vector<NodeId>> members;  // per component, ascending ids
  std::vector<Graph> graphs;         // induced subgraph per component

  int count() const { return static_cast<int>(members.size()); }
};

// Components are numbered in order of their smallest vertex, and local ids
// preserve the order of the original ids.
ComponentPartition SplitComponents(const Graph& g);

}  // namespace vfc
