#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace vfc {

// Disjoint sets with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int a) {
    int root = a;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[a] != root) a = std::exchange(parent_[a], root);
    return root;
  }

  // Returns false when a and b were already joined.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace vfc
