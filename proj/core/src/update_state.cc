#include <algorithm>
#include <string>

#include "vfc/errors.h"
#include "vfc/oracle.h"

namespace vfc {

namespace {

// Number of probes a binary search over `size` items needs.
std::size_t SearchCost(std::size_t size) {
  std::size_t probes = 1;
  while (size > 0) {
    size >>= 1;
    ++probes;
  }
  return probes;
}

}  // namespace

UpdateState::UpdateState(const StaticStructure& s, std::vector<Vertex> failed) : s_(&s) {
  std::sort(failed.begin(), failed.end());
  failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
  for (Vertex f : failed) {
    if (f < 1 || f > s.n()) {
      throw ContractViolation("failed vertex " + std::to_string(f) + " outside [1," +
                              std::to_string(s.n()) + "]");
    }
  }
  if (failed.size() > static_cast<std::size_t>(s.dstar())) {
    throw BudgetExceeded(failed.size(), s.dstar());
  }
  forest_.failed = std::move(failed);
  if (forest_.failed.empty()) return;

  BuildForest();
  EnumerateComponents();
  UnionFind uf(static_cast<int>(comps_.size()));
  AddType1Edges(uf);
  AddType2Edges(uf);
  class_.resize(comps_.size());
  for (int c = 0; c < static_cast<int>(comps_.size()); ++c) class_[c] = uf.Find(c);
}

void UpdateState::BuildForest() {
  const DfsTree& t = s_->tree();
  const int d = static_cast<int>(forest_.failed.size());
  forest_.parent.assign(d, -1);
  forest_.children.assign(d, {});
  failed_ancestors_.assign(d, {});
  // Preorder: the open ancestors of F[i] form a stack.
  std::vector<int> stack;
  for (int i = 0; i < d; ++i) {
    const Vertex f = forest_.failed[i];
    while (!stack.empty() && !t.IsAncestor(forest_.failed[stack.back()], f)) stack.pop_back();
    if (!stack.empty()) {
      forest_.parent[i] = stack.back();
      forest_.children[stack.back()].push_back(i);
      failed_ancestors_[i] = failed_ancestors_[stack.back()];
    }
    failed_ancestors_[i].push_back(i);
    stack.push_back(i);
  }
}

void UpdateState::EnumerateComponents() {
  const DfsTree& t = s_->tree();
  const LevelAncestor& la = s_->level_ancestor();
  const auto& failed = forest_.failed;
  const int d = static_cast<int>(failed.size());

  if (failed.front() != DfsTree::root()) {
    InternalComponent top;
    top.root = DfsTree::root();
    for (int i = 0; i < d; ++i) {
      if (forest_.parent[i] < 0) top.boundary.push_back(failed[i]);
    }
    comps_.push_back(std::move(top));
  }
  // Children of f in the F-forest that descend from the same child c of f
  // form a contiguous run; c roots an internal component unless c is
  // itself failed.
  for (int i = 0; i < d; ++i) {
    const Vertex f = failed[i];
    InternalComponent* open = nullptr;
    for (int j : forest_.children[i]) {
      const Vertex c = la.Query(failed[j], t.depth(f) + 1);
      ++counters_.level_ancestor_queries;
      if (c == failed[j]) {
        open = nullptr;
        continue;
      }
      if (open == nullptr || open->root != c) {
        comps_.push_back({c, {}, i});
        open = &comps_.back();
      }
      open->boundary.push_back(failed[j]);
    }
  }
  std::sort(comps_.begin(), comps_.end(),
            [](const auto& a, const auto& b) { return a.root < b.root; });

  boundary_comp_.assign(d, -1);
  for (int c = 0; c < static_cast<int>(comps_.size()); ++c) {
    for (Vertex b : comps_[c].boundary) {
      const auto pos = std::lower_bound(failed.begin(), failed.end(), b) - failed.begin();
      boundary_comp_[pos] = c;
    }
  }
}

void UpdateState::AddType1Edges(UnionFind& uf) {
  const DfsTree& t = s_->tree();
  const RangeIndex& range = s_->range();
  for (int c = 0; c < static_cast<int>(comps_.size()); ++c) {
    const InternalComponent& comp = comps_[c];
    // Walk the failed ancestors of C looking for boundary vertices of
    // ancestor components C'.
    for (int fp = comp.parent_failed; fp >= 0; fp = forest_.parent[fp]) {
      const Vertex fa = forest_.failed[fp];
      if (t.parent(fa) == forest_.parent_vertex(fp)) continue;
      const int target = boundary_comp_[fp];
      const Vertex y1 = comps_[target].root;
      const Vertex y2 = t.parent(fa);
      // C is the union of the gaps between the subtrees of its boundary.
      bool found = false;
      Vertex start = comp.root;
      auto probe = [&](Vertex x1, Vertex x2) {
        ++counters_.type1_queries;
        found = range.IsNonEmpty(x1, x2, y1, y2);
      };
      for (Vertex b : comp.boundary) {
        probe(start, b - 1);
        if (found) break;
        start = b + t.nd(b);
      }
      if (!found) probe(start, t.last(comp.root));
      if (found) {
        edges_.push_back({comp.root, y1, EdgeType::kType1});
        uf.Union(c, target);
      }
    }
  }
}

void UpdateState::AddType2Edges(UnionFind& uf) {
  const DfsTree& t = s_->tree();
  const LevelAncestor& la = s_->level_ancestor();
  const LowTable& low = s_->low();
  const auto& failed = forest_.failed;
  const int d = static_cast<int>(failed.size());
  const int levels = std::min(d, s_->levels());

  struct Segment {
    std::size_t first;
    std::size_t last;
  };
  std::vector<Vertex> blockers;  // children of f that are ancestors of failed vertices
  std::vector<std::vector<std::size_t>> blocker_pos(levels);
  std::vector<std::vector<Segment>> segments(levels);

  for (int fi = 0; fi < d; ++fi) {
    if (forest_.parent[fi] < 0) continue;
    const Vertex f = failed[fi];

    blockers.clear();
    for (int j : forest_.children[fi]) {
      const Vertex c = la.Query(failed[j], t.depth(f) + 1);
      ++counters_.level_ancestor_queries;
      if (blockers.empty() || blockers.back() != c) blockers.push_back(c);
    }
    // Position of every blocker inside L_i(f), which is ordered by
    // (low_i, DFS number).
    for (int i = 1; i <= levels; ++i) {
      auto list = s_->reordered(i).children(t, f);
      auto& pos = blocker_pos[i - 1];
      pos.clear();
      for (Vertex c : blockers) {
        auto it = std::lower_bound(list.begin(), list.end(), c, [&](Vertex a, Vertex b) {
          const Vertex la_low = low.Get(a, i);
          const Vertex lb_low = low.Get(b, i);
          return la_low != lb_low ? la_low < lb_low : a < b;
        });
        pos.push_back(static_cast<std::size_t>(it - list.begin()));
      }
      std::sort(pos.begin(), pos.end());
    }

    for (int fp = forest_.parent[fi]; fp >= 0; fp = forest_.parent[fp]) {
      const Vertex fa = failed[fp];
      if (t.parent(fa) == forest_.parent_vertex(fp)) continue;  // no C' here
      const InternalComponent& upper = comps_[boundary_comp_[fp]];
      const Vertex lo = upper.root;
      const Vertex hi = t.parent(fa);

      // Maximal runs of hanging-subtree roots in L_i(f) whose low_i lies in C'.
      for (int i = 1; i <= levels; ++i) {
        auto list = s_->reordered(i).children(t, f);
        auto key = [&](Vertex c) { return low.Get(c, i); };
        auto first = std::partition_point(list.begin(), list.end(),
                                          [&](Vertex c) { return key(c) < lo; });
        auto last = std::partition_point(first, list.end(),
                                         [&](Vertex c) { return key(c) <= hi; });
        std::size_t a = static_cast<std::size_t>(first - list.begin());
        const std::size_t b = static_cast<std::size_t>(last - list.begin());
        auto& segs = segments[i - 1];
        segs.clear();
        for (std::size_t p : blocker_pos[i - 1]) {
          if (p < a) continue;
          if (p >= b) break;
          if (p > a) segs.push_back({a, p - 1});
          a = p + 1;
        }
        if (a < b) segs.push_back({a, b - 1});
      }

      // Every internal component C strictly between f and C'.
      for (int fpp = fi; fpp != fp; fpp = forest_.parent[fpp]) {
        const Vertex fb = failed[fpp];
        if (t.parent(fb) == forest_.parent_vertex(fpp)) continue;  // no C here
        const int lower = boundary_comp_[fpp];
        const Vertex r_c = comps_[lower].root;
        bool found = false;
        for (int i = 1; i <= levels && !found; ++i) {
          const ReorderedTree& ti = s_->reordered(i);
          const RangeIndex& range = s_->range(i);
          auto list = ti.children(t, f);
          const Vertex y1 = ti.number(r_c);
          const Vertex y2 = ti.number(t.parent(fb));
          for (const Segment& seg : segments[i - 1]) {
            const Vertex left = list[seg.first];
            const Vertex right = list[seg.last];
            ++counters_.type2_queries;
            if (range.IsNonEmpty(ti.number(left), ti.number(right) + t.nd(right) - 1, y1, y2)) {
              found = true;
              break;
            }
          }
        }
        if (found) {
          edges_.push_back({r_c, upper.root, EdgeType::kType2});
          uf.Union(lower, boundary_comp_[fp]);
        }
      }
    }
  }
}

bool UpdateState::IsFailed(Vertex v) const {
  return std::binary_search(forest_.failed.begin(), forest_.failed.end(), v);
}

int UpdateState::FindComponent(Vertex root) const { return FindComponent(root, nullptr); }

int UpdateState::FindComponent(Vertex root, std::size_t* work) const {
  if (work != nullptr) *work += SearchCost(comps_.size());
  auto it = std::lower_bound(comps_.begin(), comps_.end(), root,
                             [](const InternalComponent& c, Vertex r) { return c.root < r; });
  if (it == comps_.end() || it->root != root) return -1;
  return static_cast<int>(it - comps_.begin());
}

ComponentRef UpdateState::Locate(Vertex x, QueryTrace* trace) const {
  if (x < 1 || x > s_->n()) {
    throw ContractViolation("vertex " + std::to_string(x) + " outside [1," +
                            std::to_string(s_->n()) + "]");
  }
  std::size_t local = 0;
  std::size_t* work = trace != nullptr ? &trace->work : &local;
  const auto& failed = forest_.failed;
  const DfsTree& t = s_->tree();

  ComponentRef ref;
  // Descending scan: entries above x, then x itself if failed, then the
  // failed ancestors of x from nearest to farthest.
  int nearest = -1;
  for (int j = static_cast<int>(failed.size()) - 1; j >= 0; --j) {
    ++*work;
    if (failed[j] == x) {
      throw QueryOnFailedVertex("vertex is in the failed set");
    }
    if (failed[j] < x && t.IsAncestor(failed[j], x)) {
      nearest = j;
      break;
    }
  }
  if (nearest < 0) {
    ref.root = DfsTree::root();
    ref.kind = ComponentKind::kInternal;
    ref.internal = failed.empty() ? -1 : FindComponent(ref.root, work);
    return ref;
  }
  ref.root = s_->level_ancestor().Query(x, t.depth(failed[nearest]) + 1);
  ++*work;
  ref.parent_failed = nearest;
  ref.internal = FindComponent(ref.root, work);
  ref.kind = ref.internal >= 0 ? ComponentKind::kInternal : ComponentKind::kHanging;
  return ref;
}

// Replaces a hanging subtree H by the internal component holding the first
// low_i(r_H) that is not failed. The failed ancestors of p(r_H) are merged
// against the ascending low list; the smallest failed ancestor above the
// chosen low point is a boundary vertex of its component.
bool UpdateState::Substitute(const ComponentRef& hanging, ComponentRef& out,
                             std::size_t* work) const {
  const auto& failed = forest_.failed;
  const auto& anc = failed_ancestors_[hanging.parent_failed];
  const int levels = std::min(static_cast<int>(failed.size()), s_->levels());
  std::size_t a = 0;
  for (int i = 1; i <= levels; ++i) {
    const Vertex l = s_->low().Get(hanging.root, i);
    ++*work;
    if (l == kAbsent) return false;
    while (a < anc.size() && failed[anc[a]] < l) {
      ++a;
      ++*work;
    }
    if (a < anc.size() && failed[anc[a]] == l) continue;
    // l < p(r_H), and p(r_H) is the last entry of anc.
    const int comp = boundary_comp_[anc[a]];
    out.root = comps_[comp].root;
    out.kind = ComponentKind::kInternal;
    out.internal = comp;
    out.parent_failed = comps_[comp].parent_failed;
    return true;
  }
  return false;
}

bool UpdateState::Connected(Vertex x, Vertex y, QueryTrace* trace) const {
  QueryTrace local;
  QueryTrace& tr = trace != nullptr ? *trace : local;
  ComponentRef cx = Locate(x, &tr);
  ComponentRef cy = Locate(y, &tr);
  if (forest_.failed.empty() || x == y) return true;

  Vertex vx = x;
  Vertex vy = y;
  for (;;) {
    if (cx.kind == ComponentKind::kInternal && cy.kind == ComponentKind::kInternal) {
      ++tr.work;
      return class_[cx.internal] == class_[cy.internal];
    }
    if (cx.kind == ComponentKind::kInternal) {
      std::swap(cx, cy);
      std::swap(vx, vy);
    }
    ComponentRef sub;
    if (!Substitute(cx, sub, &tr.work)) {
      ++tr.work;
      return s_->tree().IsAncestor(cx.root, vy);
    }
    ++tr.substitutions;
    cx = sub;
    vx = sub.root;
  }
}

}  // namespace vfc
