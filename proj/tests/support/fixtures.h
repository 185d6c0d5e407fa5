#pragma once

#include "vfc/graph.h"

namespace fixtures {

// Path 1-2-3-4-5 with chords 4-1, 4-2, 5-1, 5-3. DFS numbers equal the ids.
inline vfc::RawGraph G2() {
  return {5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 1}, {4, 2}, {5, 1}, {5, 3}}};
}

// The 4-cycle 1-2-3-4-1.
inline vfc::RawGraph C4() { return {4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}}; }

}  // namespace fixtures
