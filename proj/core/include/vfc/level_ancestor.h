#pragma once

#include <cstddef>
#include <vector>

#include "vfc/dfs.h"
#include "vfc/types.h"

namespace vfc {

// Level-ancestor queries in O(1) worst case after O(n log n) preprocessing:
// one jump pointer lands on an ancestor whose long-path ladder is tall
// enough to finish the climb in a single array access.
class LevelAncestor {
 public:
  LevelAncestor() = default;
  static LevelAncestor Build(const DfsTree& t);

  // The ancestor of v at depth `depth` (the root has depth 1). Throws
  // ContractViolation unless 1 <= depth <= depth(v). When `derefs` is
  // non-null it is incremented once per table access.
  Vertex Query(Vertex v, Vertex depth, std::size_t* derefs = nullptr) const;

  Vertex n() const { return n_; }

  void Serialize(BinaryWriter& w) const;
  static LevelAncestor Deserialize(BinaryReader& r);

 private:
  Vertex n_ = 0;
  std::vector<Vertex> depth_;
  std::vector<std::vector<Vertex>> jump_;  // jump_[j][v]: 2^j levels above v
  std::vector<Vertex> ladders_;
  std::vector<Vertex> ladder_pos_;  // slot of v inside its own ladder
};

}  // namespace vfc
