#include <algorithm>

#include "binary_io.h"
#include "vfc/errors.h"
#include "vfc/oracle.h"

namespace vfc {

StaticStructure StaticStructure::Build(const Graph& g, int dstar) {
  if (dstar < 1) throw ContractViolation("d* must be at least 1");
  StaticStructure s;
  s.dstar_ = dstar;
  s.tree_ = DfsTree::Build(g, 0);
  s.la_ = LevelAncestor::Build(s.tree_);
  s.range_ = RangeIndex::Build(s.tree_.n(), s.tree_.BackEdges());
  s.low_ = ComputeLowAll(s.tree_, dstar);
  for (int i = 1; i <= s.low_.levels(); ++i) s.AddLevel(i);
  return s;
}

void StaticStructure::AddLevel(int level) {
  reordered_.push_back(ReorderedTree::Build(tree_, low_, level));
  const ReorderedTree& ti = reordered_.back();
  auto points = tree_.BackEdges();
  for (auto& [x, y] : points) {
    x = ti.number(x);
    y = ti.number(y);
  }
  level_range_.push_back(RangeIndex::Build(tree_.n(), points));
}

StaticStructure StaticStructure::Resized(int dstar) const {
  if (dstar < 1) throw ContractViolation("d* must be at least 1");
  StaticStructure s;
  s.dstar_ = dstar;
  s.tree_ = tree_;
  s.la_ = la_;
  s.range_ = range_;
  const int old_levels = levels();
  const int new_levels = EffectiveLevels(tree_.n(), dstar);
  const int kept = std::min(old_levels, new_levels);
  s.low_ = low_.WithLevels(new_levels);
  s.reordered_.assign(reordered_.begin(), reordered_.begin() + kept);
  s.level_range_.assign(level_range_.begin(), level_range_.begin() + kept);
  for (int k = old_levels + 1; k <= new_levels; ++k) {
    ComputeLowLevel(s.tree_, k, s.low_);
    s.AddLevel(k);
  }
  return s;
}

UpdateState StaticStructure::Update(std::vector<Vertex> failed) const {
  return UpdateState(*this, std::move(failed));
}

void StaticStructure::Serialize(BinaryWriter& w) const {
  w.I32(dstar_);
  w.I32(levels());
  tree_.Serialize(w);
  la_.Serialize(w);
  range_.Serialize(w);
  low_.Serialize(w);
  for (const auto& t : reordered_) t.Serialize(w);
  for (const auto& r : level_range_) r.Serialize(w);
}

StaticStructure StaticStructure::Deserialize(BinaryReader& r) {
  StaticStructure s;
  s.dstar_ = r.I32();
  const int levels = r.I32();
  Require(s.dstar_ >= 1, "bad d*");
  s.tree_ = DfsTree::Deserialize(r);
  const Vertex n = s.tree_.n();
  Require(levels == EffectiveLevels(n, s.dstar_), "level count does not match d*");
  s.la_ = LevelAncestor::Deserialize(r);
  Require(s.la_.n() == n, "level-ancestor size mismatch");
  s.range_ = RangeIndex::Deserialize(r);
  Require(s.range_.n() == n, "range index size mismatch");
  s.low_ = LowTable::Deserialize(r);
  Require(s.low_.n() == n && s.low_.levels() == levels, "low table size mismatch");
  for (int i = 1; i <= levels; ++i) {
    s.reordered_.push_back(ReorderedTree::Deserialize(r, n));
    Require(s.reordered_.back().level() == i, "reordered trees out of order");
  }
  for (int i = 1; i <= levels; ++i) {
    s.level_range_.push_back(RangeIndex::Deserialize(r));
    Require(s.level_range_.back().n() == n, "range index size mismatch");
  }
  return s;
}

}  // namespace vfc
