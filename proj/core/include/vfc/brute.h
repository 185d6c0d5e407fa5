#pragma once

#include <utility>
#include <vector>

#include "vfc/types.h"

// Deliberately naive reference answers. Nothing here uses the engine's
// data structures; inputs are plain edge lists and parent arrays.
namespace vfc::brute {

using EdgeList = std::vector<std::pair<int, int>>;

// BFS labels of G \ F over vertices [base, base + n). Failed vertices get
// label -1.
std::vector<int> ComponentLabels(int n, const EdgeList& edges, const std::vector<int>& failed,
                                 int base = 0);

// Reachability of y from x in G \ F (vertex ids in [base, base + n)).
bool Connected(int n, const EdgeList& edges, const std::vector<int>& failed, int x, int y,
               int base = 0);

// A rooted tree on DFS numbers 1..n given by parent[v] (parent[1] == 0).
// Edges are over the same numbering.
//
// The k-th smallest distinct y < v such that some non-tree edge joins y to a
// vertex of the subtree of v; kAbsent if there are fewer than k.
Vertex Low(const std::vector<Vertex>& parent, const EdgeList& edges, Vertex v, int k);

struct TreeComponent {
  Vertex root = kNil;
  bool internal = false;          // some failed vertex descends from root
  std::vector<Vertex> members;    // ascending
  std::vector<Vertex> boundary;   // failed vertices whose parent is a member
};

// Components of T \ F, ordered by root.
std::vector<TreeComponent> TreeComponents(const std::vector<Vertex>& parent,
                                          const std::vector<Vertex>& failed);

// Walks parent pointers: is a an ancestor of d (a vertex is its own)?
bool IsAncestor(const std::vector<Vertex>& parent, Vertex a, Vertex d);

}  // namespace vfc::brute
