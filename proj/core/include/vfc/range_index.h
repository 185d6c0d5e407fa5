#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "vfc/types.h"

namespace vfc {

class BinaryReader;
class BinaryWriter;

// Static 2D range emptiness over points with coordinates in [1, n].
//
// Layered range tree: level L partitions x into blocks of 2^L consecutive
// values, and each block keeps the sorted y values of its points. A query
// decomposes [x1, x2] into O(log n) blocks and binary-searches each one, so
// it costs O(log^2 n) and the structure takes O(m log n) space.
class RangeIndex {
 public:
  RangeIndex() = default;

  // Points are (x, y) pairs; both coordinates must be in [1, n].
  static RangeIndex Build(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& points);

  // True iff some point lies in [x1, x2] x [y1, y2] (closed). Empty intervals
  // give false. `visits`, when set, is incremented for every block inspected
  // and every binary-search probe.
  bool IsNonEmpty(Vertex x1, Vertex x2, Vertex y1, Vertex y2,
                  std::size_t* visits = nullptr) const;

  Vertex n() const { return n_; }
  std::size_t size() const { return size_; }

  void Serialize(BinaryWriter& w) const;
  static RangeIndex Deserialize(BinaryReader& r);

 private:
  struct Level {
    std::vector<std::int32_t> start;  // block k owns ys[start[k] .. start[k+1])
    std::vector<Vertex> ys;
  };

  bool BlockHasY(const Level& level, std::size_t block, Vertex y1, Vertex y2,
                 std::size_t* visits) const;

  Vertex n_ = 0;
  std::size_t size_ = 0;
  std::vector<Level> levels_;
};

}  // namespace vfc
