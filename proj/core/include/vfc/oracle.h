#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vfc/dfs.h"
#include "vfc/graph.h"
#include "vfc/level_ancestor.h"
#include "vfc/range_index.h"
#include "vfc/types.h"
#include "vfc/union_find.h"

namespace vfc {

class UpdateState;

// Everything precomputed for one connected graph and failure budget d*:
// the DFS tree T with subtree sizes and depths, a level-ancestor index on
// T, a range-emptiness index over the back-edges of T, the low_1..low_d*
// tables, and for every level i the reordered tree T_i with its own
// range-emptiness index. All vertex arguments are DFS numbers of T.
//
// Immutable once built; any number of UpdateStates may share one instance.
class StaticStructure {
 public:
  StaticStructure() = default;

  // `g` must be connected. Throws ContractViolation for d* < 1.
  static StaticStructure Build(const Graph& g, int dstar);

  // Same answers as Build(g, dstar). Growing computes only the new levels;
  // shrinking drops the levels above the new budget.
  StaticStructure Resized(int dstar) const;

  // Oracle for the failed set (DFS numbers; duplicates allowed). Throws
  // BudgetExceeded when more than d* distinct vertices are given. The
  // returned state refers to *this, which must outlive it.
  UpdateState Update(std::vector<Vertex> failed) const;

  int dstar() const { return dstar_; }
  // Number of low levels, reordered trees and per-level range indexes. This
  // equals d* unless the component has at most d* vertices.
  int levels() const { return static_cast<int>(reordered_.size()); }
  Vertex n() const { return tree_.n(); }

  const DfsTree& tree() const { return tree_; }
  const LevelAncestor& level_ancestor() const { return la_; }
  const LowTable& low() const { return low_; }
  const RangeIndex& range() const { return range_; }
  // `level` is 1-based.
  const ReorderedTree& reordered(int level) const { return reordered_[level - 1]; }
  const RangeIndex& range(int level) const { return level_range_[level - 1]; }
  std::size_t range_index_count() const { return 1 + level_range_.size(); }

  void Serialize(BinaryWriter& w) const;
  static StaticStructure Deserialize(BinaryReader& r);

 private:
  void AddLevel(int level);

  int dstar_ = 0;
  DfsTree tree_;
  LevelAncestor la_;
  RangeIndex range_;
  LowTable low_;
  std::vector<ReorderedTree> reordered_;
  std::vector<RangeIndex> level_range_;
};

// Ancestry forest of the failed vertices. Entries are positions in the
// ascending `failed` list; -1 stands for "none".
struct FForest {
  std::vector<Vertex> failed;
  std::vector<int> parent;                 // nearest failed proper ancestor
  std::vector<std::vector<int>> children;  // ascending

  Vertex parent_vertex(int i) const {
    return parent[i] < 0 ? kNil : failed[parent[i]];
  }
};

// A component of T \ F with at least one failed descendant.
struct InternalComponent {
  Vertex root = kNil;
  std::vector<Vertex> boundary;  // failed vertices whose parent is in it
  int parent_failed = -1;        // position of p(root) in F, -1 if root is r
};

enum class ComponentKind { kInternal, kHanging };

struct ComponentRef {
  Vertex root = kNil;
  ComponentKind kind = ComponentKind::kInternal;
  int internal = -1;       // index into UpdateState::components()
  int parent_failed = -1;  // position of p(root) in F
};

enum class EdgeType { kType1, kType2 };

// Edge of the connectivity graph between two internal-component roots.
struct ComponentEdge {
  Vertex a = kNil;
  Vertex b = kNil;
  EdgeType type = EdgeType::kType1;
};

struct UpdateCounters {
  std::size_t type1_queries = 0;  // range queries issued for Type-1 edges
  std::size_t type2_queries = 0;  // range queries issued for Type-2 edges
  std::size_t level_ancestor_queries = 0;
};

struct QueryTrace {
  std::size_t work = 0;  // scan steps, search probes and O(1) lookups
  int substitutions = 0;  // hanging subtree replaced by an internal component
};

// Oracle for one failed set F: the F-forest, the internal components of
// T \ F and the connected classes of their connectivity graph.
class UpdateState {
 public:
  bool Connected(Vertex x, Vertex y, QueryTrace* trace = nullptr) const;

  // Component of T \ F containing x. Throws QueryOnFailedVertex if x is
  // failed. With F empty, the whole tree is reported as one component with
  // no internal index.
  ComponentRef Locate(Vertex x, QueryTrace* trace = nullptr) const;

  bool IsFailed(Vertex v) const;
  const StaticStructure& structure() const { return *s_; }
  const FForest& forest() const { return forest_; }
  std::span<const Vertex> failed() const { return forest_.failed; }
  // Sorted by root.
  const std::vector<InternalComponent>& components() const { return comps_; }
  const std::vector<ComponentEdge>& edges() const { return edges_; }
  const UpdateCounters& counters() const { return counters_; }
  // Both arguments index components().
  bool SameClass(int a, int b) const { return class_[a] == class_[b]; }
  int FindComponent(Vertex root) const;  // -1 unless root of an internal one

 private:
  friend class StaticStructure;
  UpdateState(const StaticStructure& s, std::vector<Vertex> failed);

  void BuildForest();
  void EnumerateComponents();
  void AddType1Edges(UnionFind& uf);
  void AddType2Edges(UnionFind& uf);
  int FindComponent(Vertex root, std::size_t* work) const;
  bool Substitute(const ComponentRef& hanging, ComponentRef& out,
                  std::size_t* work) const;

  const StaticStructure* s_ = nullptr;
  FForest forest_;
  std::vector<std::vector<int>> failed_ancestors_;  // ascending, inclusive
  std::vector<InternalComponent> comps_;
  std::vector<int> boundary_comp_;  // per failed position, -1 if none
  std::vector<ComponentEdge> edges_;
  std::vector<int> class_;
  UpdateCounters counters_;
};

}  // namespace vfc
