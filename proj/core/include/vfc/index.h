#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vfc/graph.h"
#include "vfc/oracle.h"
#include "vfc/types.h"

namespace vfc {

class FailureOracle;

// Connectivity oracle under vertex failures for an arbitrary graph. One
// StaticStructure per connected component; vertex ids are the 0-based ids
// of the normalized Graph.
class Index {
 public:
  Index() = default;

  static Index Build(const Graph& g, int dstar);
  Index Resized(int dstar) const;

  // Throws BudgetExceeded for more than d* distinct vertices and
  // ContractViolation for unknown ids. The oracle keeps a pointer to this
  // Index, which must stay alive and in place.
  FailureOracle Update(std::span<const NodeId> failed) const;

  int dstar() const { return dstar_; }
  NodeId n() const { return static_cast<NodeId>(comp_id_.size()); }
  std::size_t m() const { return m_; }

  int component_count() const { return static_cast<int>(comps_.size()); }
  int component_of(NodeId u) const { return comp_id_[u]; }
  const StaticStructure& component(int c) const { return comps_[c]; }
  // DFS number of u inside its component, and back.
  Vertex dfs_number(NodeId u) const;
  NodeId node(int comp, Vertex v) const;

  // Versioned little-endian binary image ("VFC1").
  std::string Serialize() const;
  static Index Deserialize(std::string_view bytes);
  void Save(const std::string& path) const;
  static Index Load(const std::string& path);

 private:
  int dstar_ = 0;
  std::size_t m_ = 0;
  std::vector<int> comp_id_;
  std::vector<NodeId> local_id_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<StaticStructure> comps_;
};

// Answers connectivity in G \ F for one failed set. Components without
// failures are answered directly.
class FailureOracle {
 public:
  // Throws QueryOnFailedVertex if x or y failed, ContractViolation for
  // unknown ids.
  bool Connected(NodeId x, NodeId y, QueryTrace* trace = nullptr) const;

  bool IsFailed(NodeId u) const;
  std::span<const NodeId> failed() const { return failed_; }
  const Index& index() const { return *index_; }

  // State of component c, or nullptr when none of its vertices failed.
  const UpdateState* state(int c) const;
  std::span<const std::pair<int, UpdateState>> states() const { return states_; }
  UpdateCounters totals() const;

 private:
  friend class Index;
  FailureOracle(const Index& index, std::vector<NodeId> failed);

  const Index* index_ = nullptr;
  std::vector<NodeId> failed_;
  std::vector<std::pair<int, UpdateState>> states_;  // sorted by component
};

}  // namespace vfc
