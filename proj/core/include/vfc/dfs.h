#pragma once

#include <span>
#include <utility>
#include <vector>

#include "vfc/graph.h"
#include "vfc/types.h"

namespace vfc {

class BinaryReader;
class BinaryWriter;

// DFS tree of a connected graph with vertices identified by their visit
// order. Subtrees are intervals: T(v) = [v, v + nd(v) - 1].
class DfsTree {
 public:
  DfsTree() = default;

  // Iterative DFS from `root`, exploring neighbours in ascending id order.
  // The graph must be connected.
  static DfsTree Build(const Graph& g, NodeId root = 0);

  Vertex n() const { return n_; }
  static constexpr Vertex root() { return 1; }

  Vertex parent(Vertex v) const { return parent_[v]; }
  Vertex nd(Vertex v) const { return nd_[v]; }
  Vertex depth(Vertex v) const { return depth_[v]; }
  Vertex last(Vertex v) const { return v + nd_[v] - 1; }

  Vertex number(NodeId u) const { return number_[u]; }
  NodeId node(Vertex v) const { return node_[v]; }

  bool IsAncestor(Vertex a, Vertex d) const {
    return a <= d && d < a + nd_[a];
  }

  // Children in ascending DFS order.
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + child_offset_[v],
            child_offset_[v + 1] - child_offset_[v]};
  }
  std::size_t child_offset(Vertex v) const { return child_offset_[v]; }
  std::span<const std::size_t> child_offsets() const { return child_offset_; }

  // Neighbours of v, as DFS numbers, ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.row(v); }

  // Lower ends y < v of the back-edges incident to v, ascending. The tree
  // edge to the parent is excluded: the parent is always the largest
  // neighbour below v.
  std::span<const Vertex> back_edge_ends(Vertex v) const {
    auto row = adj_.row(v);
    return row.first(up_count_[v] == 0 ? 0 : up_count_[v] - 1);
  }

  // All back-edges as (x, y) with y a proper ancestor of x.
  std::vector<std::pair<Vertex, Vertex>> BackEdges() const;
  std::size_t back_edge_count() const;

  void Serialize(BinaryWriter& w) const;
  static DfsTree Deserialize(BinaryReader& r);

 private:
  void BuildChildren();

  Vertex n_ = 0;
  std::vector<Vertex> number_;  // NodeId -> DFS number
  std::vector<NodeId> node_;    // DFS number -> NodeId (index 0 unused)
  std::vector<Vertex> parent_;
  std::vector<Vertex> nd_;
  std::vector<Vertex> depth_;
  std::vector<Vertex> up_count_;  // neighbours smaller than v
  Csr adj_;                       // rows indexed by DFS number
  std::vector<std::size_t> child_offset_;
  std::vector<Vertex> children_;
};

// low_1(v) < low_2(v) < ... per vertex, stored in fixed-width rows of
// `levels()` slots with kAbsent for missing entries.
class LowTable {
 public:
  LowTable() = default;
  LowTable(Vertex n, int levels);

  Vertex n() const { return n_; }
  int levels() const { return levels_; }
  int computed() const { return computed_; }

  // `level` is 1-based.
  Vertex Get(Vertex v, int level) const {
    return slots_[Index(v, level)];
  }
  std::span<const Vertex> Row(Vertex v) const {
    return {slots_.data() + static_cast<std::size_t>(v) * levels_,
            static_cast<std::size_t>(levels_)};
  }

  // Copy with a different row width; extra slots are absent and levels past
  // the new width are dropped.
  LowTable WithLevels(int levels) const;

  void Serialize(BinaryWriter& w) const;
  static LowTable Deserialize(BinaryReader& r);

 private:
  friend void ComputeLowLevel(const DfsTree&, int, LowTable&);

  std::size_t Index(Vertex v, int level) const {
    return static_cast<std::size_t>(v) * levels_ + (level - 1);
  }

  Vertex n_ = 0;
  int levels_ = 0;
  int computed_ = 0;
  std::vector<Vertex> slots_;
};

// Number of low levels that can be non-empty for a tree on n vertices with
// budget d*: a vertex has at most n - 1 proper ancestors.
int EffectiveLevels(Vertex n, int dstar);

// Fills level k of `table` bottom-up from levels 1..k-1, with binary
// searches over the first k back-edge ends of each vertex and the first k
// low entries of each child. Requires table.computed() == k - 1 and
// table.levels() >= k.
void ComputeLowLevel(const DfsTree& t, int k, LowTable& table);

// low_1..low_k for every vertex, with k = EffectiveLevels(n, dstar).
LowTable ComputeLowAll(const DfsTree& t, int dstar);

// The i-th reordered DFS tree T_i: T traversed from the root with each
// children list sorted by low_i (absent last, ties by DFS number). Shares
// parents and subtree sizes with T; only the numbering differs.
class ReorderedTree {
 public:
  ReorderedTree() = default;
  static ReorderedTree Build(const DfsTree& t, const LowTable& low, int level);

  int level() const { return level_; }
  Vertex number(Vertex v) const { return number_[v]; }
  Vertex vertex(Vertex number_i) const { return vertex_[number_i]; }

  // L_i(v): children of v ascending by (low_i, DFS number).
  std::span<const Vertex> children(const DfsTree& t, Vertex v) const {
    return {order_.data() + t.child_offset(v), t.children(v).size()};
  }

  void Serialize(BinaryWriter& w) const;
  static ReorderedTree Deserialize(BinaryReader& r, Vertex n);

 private:
  int level_ = 0;
  std::vector<Vertex> number_;  // DFS number -> DFS_i number
  std::vector<Vertex> vertex_;  // DFS_i number -> DFS number
  std::vector<Vertex> order_;   // children lists, same offsets as T
};

}  // namespace vfc
