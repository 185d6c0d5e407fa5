#include "vfc/level_ancestor.h"

#include <algorithm>
#include <bit>
#include <string>

#include "binary_io.h"
#include "vfc/errors.h"

namespace vfc {

LevelAncestor LevelAncestor::Build(const DfsTree& t) {
  LevelAncestor la;
  const Vertex n = t.n();
  la.n_ = n;
  la.depth_.assign(n + 1, 0);
  Vertex max_depth = 0;
  for (Vertex v = 1; v <= n; ++v) {
    la.depth_[v] = t.depth(v);
    max_depth = std::max(max_depth, t.depth(v));
  }

  const int levels = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(max_depth))));
  la.jump_.assign(levels, std::vector<Vertex>(n + 1, kNil));
  for (Vertex v = 1; v <= n; ++v) la.jump_[0][v] = t.parent(v);
  for (int j = 1; j < levels; ++j) {
    const auto& prev = la.jump_[j - 1];
    auto& cur = la.jump_[j];
    for (Vertex v = 1; v <= n; ++v) cur[v] = prev[prev[v]];
  }

  // Long-path decomposition: each vertex continues into its tallest child.
  std::vector<Vertex> height(n + 1, 0);
  std::vector<Vertex> long_child(n + 1, kNil);
  for (Vertex v = n; v >= 2; --v) {
    const Vertex p = t.parent(v);
    if (long_child[p] == kNil || height[v] + 1 > height[p]) {
      height[p] = std::max(height[p], height[v] + 1);
      long_child[p] = v;
    }
  }
  // The ladder of a path with k vertices is the path plus up to k ancestors
  // of its top, stored top-down.
  la.ladder_pos_.assign(n + 1, 0);
  la.ladders_.reserve(2 * static_cast<std::size_t>(n));
  std::vector<Vertex> path;
  std::vector<Vertex> above;
  for (Vertex top = 1; top <= n; ++top) {
    if (top != DfsTree::root() && long_child[t.parent(top)] == top) continue;
    path.clear();
    for (Vertex v = top; v != kNil; v = long_child[v]) path.push_back(v);
    above.clear();
    for (Vertex a = t.parent(top); a != kNil && above.size() < path.size(); a = t.parent(a)) {
      above.push_back(a);
    }
    la.ladders_.insert(la.ladders_.end(), above.rbegin(), above.rend());
    for (Vertex v : path) {
      la.ladder_pos_[v] = static_cast<Vertex>(la.ladders_.size());
      la.ladders_.push_back(v);
    }
  }
  return la;
}

Vertex LevelAncestor::Query(Vertex v, Vertex depth, std::size_t* derefs) const {
  if (v < 1 || v > n_) throw ContractViolation("level-ancestor query on unknown vertex");
  const Vertex dv = depth_[v];
  if (depth < 1 || depth > dv) {
    throw ContractViolation("level-ancestor depth " + std::to_string(depth) +
                            " outside [1," + std::to_string(dv) + "]");
  }
  std::size_t touched = 1;
  const auto dist = static_cast<unsigned>(dv - depth);
  Vertex answer = v;
  if (dist != 0) {
    const int j = static_cast<int>(std::bit_width(dist)) - 1;
    const Vertex u = jump_[j][v];
    const auto rest = static_cast<Vertex>(dist - (1u << j));
    answer = ladders_[ladder_pos_[u] - rest];
    touched += 3;
  }
  if (derefs != nullptr) *derefs += touched;
  return answer;
}

void LevelAncestor::Serialize(BinaryWriter& w) const {
  w.I32(n_);
  w.I32Vector(depth_);
  w.I32(static_cast<std::int32_t>(jump_.size()));
  for (const auto& level : jump_) w.I32Vector(level);
  w.I32Vector(ladders_);
  w.I32Vector(ladder_pos_);
}

LevelAncestor LevelAncestor::Deserialize(BinaryReader& r) {
  LevelAncestor la;
  la.n_ = r.I32();
  Require(la.n_ >= 1, "bad level-ancestor size");
  const auto n1 = static_cast<std::size_t>(la.n_) + 1;
  la.depth_ = r.I32Vector(n1);
  const int levels = r.I32();
  Require(levels >= 1 && levels <= 32, "bad jump table height");
  la.jump_.resize(levels);
  for (auto& level : la.jump_) {
    level = r.I32Vector(n1);
    for (Vertex a : level) Require(a >= 0 && a <= la.n_, "bad jump pointer");
  }
  la.ladders_ = r.I32Vector();
  la.ladder_pos_ = r.I32Vector(n1);
  for (Vertex a : la.ladders_) Require(a >= 1 && a <= la.n_, "bad ladder entry");
  for (Vertex v = 1; v <= la.n_; ++v) {
    Require(la.ladder_pos_[v] >= 0 &&
                static_cast<std::size_t>(la.ladder_pos_[v]) < la.ladders_.size() &&
                la.depth_[v] >= 1,
            "bad ladder position");
  }
  return la;
}

}  // namespace vfc
