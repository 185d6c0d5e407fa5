#include "vfc/range_index.h"

#include <algorithm>

#include "binary_io.h"
#include "vfc/errors.h"

namespace vfc {

RangeIndex RangeIndex::Build(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& points) {
  if (n < 1) throw ContractViolation("range index over an empty domain");
  RangeIndex idx;
  idx.n_ = n;
  idx.size_ = points.size();

  Level leaves;
  leaves.start.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [x, y] : points) {
    if (x < 1 || x > n || y < 1 || y > n) {
      throw ContractViolation("range index point outside [1,n]");
    }
    ++leaves.start[x];
  }
  for (Vertex x = 0; x < n; ++x) leaves.start[x + 1] += leaves.start[x];
  leaves.ys.resize(points.size());
  {
    std::vector<std::int32_t> next(leaves.start.begin(), leaves.start.end() - 1);
    for (auto [x, y] : points) leaves.ys[next[x - 1]++] = y;
  }
  for (Vertex x = 0; x < n; ++x) {
    std::sort(leaves.ys.begin() + leaves.start[x], leaves.ys.begin() + leaves.start[x + 1]);
  }
  idx.levels_.push_back(std::move(leaves));

  while (idx.levels_.back().start.size() > 2) {
    const Level& below = idx.levels_.back();
    const std::size_t child_blocks = below.start.size() - 1;
    const std::size_t blocks = (child_blocks + 1) / 2;
    Level up;
    up.start.resize(blocks + 1);
    up.ys.resize(below.ys.size());
    for (std::size_t k = 0; k < blocks; ++k) {
      const std::size_t left = 2 * k;
      const std::size_t right = std::min(2 * k + 1, child_blocks - 1);
      up.start[k] = below.start[left];
      const auto lo = below.ys.begin() + below.start[left];
      const auto mid = below.ys.begin() + below.start[left + 1];
      const auto hi = below.ys.begin() + below.start[right + 1];
      std::merge(lo, mid, mid, hi, up.ys.begin() + below.start[left]);
    }
    up.start[blocks] = below.start[child_blocks];
    idx.levels_.push_back(std::move(up));
  }
  return idx;
}

bool RangeIndex::BlockHasY(const Level& level, std::size_t block, Vertex y1, Vertex y2,
                           std::size_t* visits) const {
  std::size_t lo = static_cast<std::size_t>(level.start[block]);
  std::size_t hi = static_cast<std::size_t>(level.start[block + 1]);
  std::size_t probes = 1;
  // First y >= y1.
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++probes;
    if (level.ys[mid] < y1) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (visits != nullptr) *visits += probes;
  return lo < static_cast<std::size_t>(level.start[block + 1]) && level.ys[lo] <= y2;
}

bool RangeIndex::IsNonEmpty(Vertex x1, Vertex x2, Vertex y1, Vertex y2,
                            std::size_t* visits) const {
  x1 = std::max<Vertex>(x1, 1);
  x2 = std::min<Vertex>(x2, n_);
  if (x1 > x2 || y1 > y2 || size_ == 0) return false;
  std::size_t l = static_cast<std::size_t>(x1 - 1);
  std::size_t r = static_cast<std::size_t>(x2);
  for (std::size_t depth = 0; l < r; ++depth) {
    const Level& level = levels_[depth];
    if (l & 1) {
      if (BlockHasY(level, l, y1, y2, visits)) return true;
      ++l;
    }
    if (r & 1) {
      --r;
      if (BlockHasY(level, r, y1, y2, visits)) return true;
    }
    l >>= 1;
    r >>= 1;
  }
  return false;
}

void RangeIndex::Serialize(BinaryWriter& w) const {
  w.I32(n_);
  w.U64(size_);
  w.I32(static_cast<std::int32_t>(levels_.size()));
  for (const auto& level : levels_) {
    w.I32Vector(level.start);
    w.I32Vector(level.ys);
  }
}

RangeIndex RangeIndex::Deserialize(BinaryReader& r) {
  RangeIndex idx;
  idx.n_ = r.I32();
  idx.size_ = static_cast<std::size_t>(r.U64());
  const int levels = r.I32();
  Require(idx.n_ >= 1 && levels >= 1 && levels <= 40, "bad range index header");
  std::size_t expected_blocks = static_cast<std::size_t>(idx.n_);
  idx.levels_.resize(levels);
  for (auto& level : idx.levels_) {
    level.start = r.I32Vector(expected_blocks + 1);
    level.ys = r.I32Vector(idx.size_);
    Require(level.start.front() == 0 &&
                static_cast<std::size_t>(level.start.back()) == idx.size_,
            "bad range block offsets");
    for (std::size_t k = 0; k < expected_blocks; ++k) {
      Require(level.start[k] <= level.start[k + 1], "bad range block offsets");
    }
    expected_blocks = (expected_blocks + 1) / 2;
  }
  Require(idx.levels_.back().start.size() == 2, "range index is missing levels");
  return idx;
}

}  // namespace vfc
