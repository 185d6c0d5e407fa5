#include "vfc/dfs.h"

#include <algorithm>

#include "binary_io.h"
#include "vfc/errors.h"

namespace vfc {

DfsTree DfsTree::Build(const Graph& g, NodeId root) {
  const NodeId n = g.n();
  if (n < 1 || root < 0 || root >= n) {
    throw ContractViolation("DFS root outside the graph");
  }
  DfsTree t;
  t.n_ = n;
  t.number_.assign(n, kNil);
  t.node_.assign(n + 1, -1);
  t.parent_.assign(n + 1, kNil);
  t.nd_.assign(n + 1, 1);
  t.depth_.assign(n + 1, 0);

  Vertex next = 0;
  auto visit = [&](NodeId u, Vertex parent) {
    const Vertex num = ++next;
    t.number_[u] = num;
    t.node_[num] = u;
    t.parent_[num] = parent;
    t.depth_[num] = parent == kNil ? 1 : t.depth_[parent] + 1;
  };

  // Explicit stack of (vertex, next neighbour position).
  std::vector<std::pair<NodeId, std::size_t>> stack;
  visit(root, kNil);
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [u, pos] = stack.back();
    auto nbrs = g.neighbors(u);
    while (pos < nbrs.size() && t.number_[nbrs[pos]] != kNil) ++pos;
    if (pos == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    const NodeId w = nbrs[pos++];
    visit(w, t.number_[u]);
    stack.emplace_back(w, 0);
  }
  if (next != n) throw ContractViolation("DFS input graph is not connected");

  for (Vertex v = n; v >= 2; --v) t.nd_[t.parent_[v]] += t.nd_[v];

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.m());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w : g.neighbors(u)) {
      if (u < w) edges.emplace_back(t.number_[u], t.number_[w]);
    }
  }
  t.adj_ = BuildSortedCsr(n + 1, edges);
  t.BuildChildren();
  return t;
}

void DfsTree::BuildChildren() {
  up_count_.assign(n_ + 1, 0);
  for (Vertex v = 1; v <= n_; ++v) {
    auto row = adj_.row(v);
    up_count_[v] = static_cast<Vertex>(
        std::lower_bound(row.begin(), row.end(), v) - row.begin());
  }
  child_offset_.assign(n_ + 2, 0);
  for (Vertex v = 2; v <= n_; ++v) ++child_offset_[parent_[v] + 1];
  for (Vertex v = 0; v <= n_; ++v) child_offset_[v + 1] += child_offset_[v];
  children_.assign(n_ > 0 ? n_ - 1 : 0, kNil);
  auto fill = child_offset_;
  // Ascending v keeps every children list ascending.
  for (Vertex v = 2; v <= n_; ++v) children_[fill[parent_[v]]++] = v;
}

std::vector<std::pair<Vertex, Vertex>> DfsTree::BackEdges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(back_edge_count());
  for (Vertex v = 1; v <= n_; ++v) {
    for (Vertex y : back_edge_ends(v)) out.emplace_back(v, y);
  }
  return out;
}

std::size_t DfsTree::back_edge_count() const {
  return n_ == 0 ? 0 : adj_.targets.size() / 2 - static_cast<std::size_t>(n_ - 1);
}

void DfsTree::Serialize(BinaryWriter& w) const {
  w.I32(n_);
  w.I32Vector(number_);
  w.I32Vector(parent_);
  w.I32Vector(nd_);
  w.I32Vector(depth_);
  w.SizeVector(adj_.offsets);
  w.I32Vector(adj_.targets);
}

DfsTree DfsTree::Deserialize(BinaryReader& r) {
  DfsTree t;
  t.n_ = r.I32();
  Require(t.n_ >= 1, "component with no vertices");
  const auto n1 = static_cast<std::size_t>(t.n_) + 1;
  t.number_ = r.I32Vector(t.n_);
  t.parent_ = r.I32Vector(n1);
  t.nd_ = r.I32Vector(n1);
  t.depth_ = r.I32Vector(n1);
  t.adj_.offsets = r.SizeVector(n1 + 1);
  t.adj_.targets = r.I32Vector();

  t.node_.assign(n1, -1);
  for (NodeId u = 0; u < t.n_; ++u) {
    const Vertex v = t.number_[u];
    Require(v >= 1 && v <= t.n_ && t.node_[v] == -1, "DFS numbering is not a permutation");
    t.node_[v] = u;
  }
  Require(t.parent_[1] == kNil && t.depth_[1] == 1, "bad DFS root");
  for (Vertex v = 2; v <= t.n_; ++v) {
    Require(t.parent_[v] >= 1 && t.parent_[v] < v, "bad DFS parent");
  }
  for (Vertex v = 1; v <= t.n_; ++v) {
    Require(t.nd_[v] >= 1 && t.nd_[v] <= t.n_ - v + 1, "bad subtree size");
  }
  Require(t.adj_.offsets.front() == 0 && t.adj_.offsets.back() == t.adj_.targets.size(),
          "bad adjacency offsets");
  for (std::size_t v = 0; v + 1 < t.adj_.offsets.size(); ++v) {
    Require(t.adj_.offsets[v] <= t.adj_.offsets[v + 1], "bad adjacency offsets");
  }
  for (Vertex x : t.adj_.targets) Require(x >= 1 && x <= t.n_, "bad adjacency entry");
  t.BuildChildren();
  return t;
}

LowTable::LowTable(Vertex n, int levels)
    : n_(n),
      levels_(levels),
      slots_((static_cast<std::size_t>(n) + 1) * static_cast<std::size_t>(levels), kAbsent) {}

LowTable LowTable::WithLevels(int levels) const {
  LowTable out(n_, levels);
  const int keep = std::min(levels, levels_);
  for (Vertex v = 1; v <= n_; ++v) {
    for (int k = 1; k <= keep; ++k) out.slots_[out.Index(v, k)] = Get(v, k);
  }
  out.computed_ = std::min(computed_, levels);
  return out;
}

void LowTable::Serialize(BinaryWriter& w) const {
  w.I32(n_);
  w.I32(levels_);
  w.I32(computed_);
  w.I32Vector(slots_);
}

LowTable LowTable::Deserialize(BinaryReader& r) {
  LowTable t;
  t.n_ = r.I32();
  t.levels_ = r.I32();
  t.computed_ = r.I32();
  Require(t.n_ >= 1 && t.levels_ >= 0 && t.computed_ == t.levels_, "bad low table header");
  t.slots_ = r.I32Vector((static_cast<std::size_t>(t.n_) + 1) * t.levels_);
  return t;
}

int EffectiveLevels(Vertex n, int dstar) {
  if (dstar < 1) throw ContractViolation("d* must be at least 1");
  return std::min(dstar, std::max(n - 1, 0));
}

void ComputeLowLevel(const DfsTree& t, int k, LowTable& table) {
  if (k < 1 || table.computed_ != k - 1 || table.levels_ < k || table.n_ != t.n()) {
    throw ContractViolation("low levels must be computed in order");
  }
  // Children have larger DFS numbers, so descending order is bottom-up.
  for (Vertex v = t.n(); v >= 2; --v) {
    const Vertex prev = k == 1 ? kNil : table.Get(v, k - 1);
    if (prev == kAbsent) continue;  // slot already absent

    // low_k(v) is at most the k-th back-edge end of v itself.
    Vertex best = kAbsent;
    auto own = t.back_edge_ends(v);
    auto own_end = own.begin() + std::min<std::size_t>(own.size(), k);
    if (auto it = std::upper_bound(own.begin(), own_end, prev); it != own_end) {
      best = *it;
    }
    for (Vertex c : t.children(v)) {
      const Vertex bound = best == kAbsent ? v : best;
      auto row = table.Row(c).first(k);
      auto it = std::upper_bound(row.begin(), row.end(), prev);
      if (it != row.end() && *it < bound) best = *it;
    }
    table.slots_[table.Index(v, k)] = best;
  }
  table.computed_ = k;
}

LowTable ComputeLowAll(const DfsTree& t, int dstar) {
  const int levels = EffectiveLevels(t.n(), dstar);
  LowTable table(t.n(), levels);
  for (int k = 1; k <= levels; ++k) ComputeLowLevel(t, k, table);
  return table;
}

ReorderedTree ReorderedTree::Build(const DfsTree& t, const LowTable& low, int level) {
  if (level < 1 || level > low.computed()) {
    throw ContractViolation("reordered tree requested for an uncomputed low level");
  }
  ReorderedTree r;
  r.level_ = level;
  const Vertex n = t.n();
  r.order_.reserve(n > 0 ? n - 1 : 0);
  for (Vertex v = 1; v <= n; ++v) {
    auto kids = t.children(v);
    r.order_.insert(r.order_.end(), kids.begin(), kids.end());
  }
  for (Vertex v = 1; v <= n; ++v) {
    auto first = r.order_.begin() + static_cast<std::ptrdiff_t>(t.child_offset(v));
    auto last = first + static_cast<std::ptrdiff_t>(t.children(v).size());
    std::stable_sort(first, last, [&](Vertex a, Vertex b) {
      return low.Get(a, level) < low.Get(b, level);
    });
  }
  r.number_.assign(n + 1, kNil);
  r.vertex_.assign(n + 1, kNil);
  r.number_[DfsTree::root()] = 1;
  // Parents precede children in T's numbering.
  for (Vertex v = 1; v <= n; ++v) {
    Vertex next = r.number_[v] + 1;
    for (Vertex c : r.children(t, v)) {
      r.number_[c] = next;
      next += t.nd(c);
    }
  }
  for (Vertex v = 1; v <= n; ++v) r.vertex_[r.number_[v]] = v;
  return r;
}

void ReorderedTree::Serialize(BinaryWriter& w) const {
  w.I32(level_);
  w.I32Vector(number_);
  w.I32Vector(order_);
}

ReorderedTree ReorderedTree::Deserialize(BinaryReader& r, Vertex n) {
  ReorderedTree t;
  t.level_ = r.I32();
  t.number_ = r.I32Vector(static_cast<std::size_t>(n) + 1);
  t.order_ = r.I32Vector(static_cast<std::size_t>(n - 1));
  t.vertex_.assign(n + 1, kNil);
  for (Vertex v = 1; v <= n; ++v) {
    const Vertex num = t.number_[v];
    Require(num >= 1 && num <= n && t.vertex_[num] == kNil, "DFS_i is not a permutation");
    t.vertex_[num] = v;
  }
  for (Vertex c : t.order_) Require(c >= 2 && c <= n, "bad reordered child");
  return t;
}

}  // namespace vfc
