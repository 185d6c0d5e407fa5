#pragma once

#include <cstdint>
#include <limits>

namespace vfc {

// Identifier of a vertex in a normalized Graph (0-based, contiguous).
using NodeId = std::int32_t;

// DFS number of a vertex inside one connected component (1-based; the root
// is 1). Zero is reserved for "no vertex" (the parent of the root, an empty
// F-forest parent).
using Vertex = std::int32_t;

inline constexpr Vertex kNil = 0;

// Marks a low_k entry that does not exist. It compares greater than every
// DFS number, so sorted low arrays keep absent entries last.
inline constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();

}  // namespace vfc
