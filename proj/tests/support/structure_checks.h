#pragma once

// Exhaustive checks of the component structure of T \ F that the oracle
// relies on. Each returns "" or a description of the first violation.

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "support/reference.h"
#include "vfc/oracle.h"

namespace checks {

using vfc::Vertex;

struct Census {
  ref::Tree tree;
  std::vector<Vertex> failed;
  std::vector<char> dead;
  std::vector<Vertex> root;                 // per vertex, 0 when failed
  std::set<Vertex> internal;                // roots of internal components
  std::vector<std::vector<Vertex>> boundary;  // per root
};

inline Census Take(const vfc::StaticStructure& s, const std::vector<Vertex>& failed) {
  Census c;
  c.tree = ref::TreeOf(s.tree());
  c.failed = failed;
  const Vertex n = c.tree.n();
  c.dead.assign(n + 1, 0);
  for (Vertex f : failed) c.dead[f] = 1;
  c.root = ref::ComponentRoots(c.tree, failed);
  c.boundary.assign(n + 1, {});
  for (Vertex f : failed) {
    for (Vertex v = 1; v <= n; ++v) {
      if (!c.dead[v] && c.root[v] == v && c.tree.IsAncestor(v, f)) c.internal.insert(v);
    }
    Vertex p = c.tree.parent[f];
    if (p != 0 && !c.dead[p]) c.boundary[c.root[p]].push_back(f);
  }
  for (auto& b : c.boundary) std::sort(b.begin(), b.end());
  return c;
}

inline Vertex NearestFailedAncestor(const Census& c, Vertex f) {
  for (Vertex u = c.tree.parent[f]; u != 0; u = c.tree.parent[u]) {
    if (c.dead[u]) return u;
  }
  return 0;
}

// Facts about T \ F that do not involve the engine's answers.
inline std::string CheckComponentFacts(const vfc::StaticStructure& s, const vfc::Graph& g,
                                        const Census& c) {
  std::ostringstream err;
  const vfc::DfsTree& t = s.tree();
  const Vertex n = c.tree.n();
  if (c.internal.size() > c.failed.size()) {
    err << "internal components " << c.internal.size() << " > |F| " << c.failed.size();
    return err.str();
  }
  for (Vertex r : c.internal) {
    // The root is r or hangs off a failed vertex.
    if (r != 1 && !c.dead[c.tree.parent[r]]) {
      err << "root " << r << " has a live parent";
      return err.str();
    }
    // Descendants outside C have exactly one boundary ancestor.
    for (Vertex v = r; v <= n; ++v) {
      if (!c.tree.IsAncestor(r, v) || (!c.dead[v] && c.root[v] == r)) continue;
      int hits = 0;
      for (Vertex f : c.boundary[r]) hits += c.tree.IsAncestor(f, v);
      if (hits != 1) {
        err << "descendant " << v << " of C(" << r << ") has " << hits << " boundary ancestors";
        return err.str();
      }
    }
    // C is the subtree interval minus the boundary subtrees.
    std::vector<Vertex> from_intervals;
    Vertex lo = r;
    for (Vertex f : c.boundary[r]) {
      for (Vertex v = lo; v < f; ++v) from_intervals.push_back(v);
      lo = f + t.nd(f);
    }
    for (Vertex v = lo; v <= r + t.nd(r) - 1; ++v) from_intervals.push_back(v);
    std::vector<Vertex> members;
    for (Vertex v = 1; v <= n; ++v) {
      if (!c.dead[v] && c.root[v] == r) members.push_back(v);
    }
    if (members != from_intervals) {
      err << "C(" << r << ") differs from its interval decomposition";
      return err.str();
    }
  }
  // Boundary iff parent_F(f) != p(f), and the root that test names.
  for (Vertex f : c.failed) {
    if (f == 1) continue;
    Vertex pf = NearestFailedAncestor(c, f);
    Vertex p = c.tree.parent[f];
    bool is_boundary = !c.dead[p] && c.internal.count(c.root[p]);
    if (is_boundary != (pf != p)) {
      err << "boundary criterion fails at f=" << f;
      return err.str();
    }
    if (is_boundary) {
      Vertex expect = pf == 0 ? 1 : c.tree.AncestorAtDepth(f, c.tree.Depth(pf) + 1);
      if (c.root[p] != expect) {
        err << "boundary vertex " << f << " names root " << expect << ", actual " << c.root[p];
        return err.str();
      }
    }
  }
  // Edges across components: back-edges, never between two hanging
  // subtrees, and always joining a component to one of its ancestors.
  for (auto [a, b] : ref::DfsEdges(g, t)) {
    if (c.dead[a] || c.dead[b] || c.root[a] == c.root[b]) continue;
    if (c.tree.parent[a] == b || !c.tree.IsAncestor(b, a)) {
      err << "edge " << a << "-" << b << " across components is not a back-edge";
      return err.str();
    }
    Vertex ra = c.root[a];
    Vertex rb = c.root[b];
    bool ia = c.internal.count(ra);
    bool ib = c.internal.count(rb);
    Vertex lo = std::min(ra, rb);
    Vertex hi = std::max(ra, rb);
    if (!c.tree.IsAncestor(lo, hi)) {
      err << "components " << lo << ", " << hi << " joined but not nested";
      return err.str();
    }
    if (!ia && !ib) {
      err << "edge " << a << "-" << b << " joins two hanging subtrees";
      return err.str();
    }
    if (ia != ib) {
      Vertex h = ia ? rb : ra;
      Vertex in = ia ? ra : rb;
      if (!c.tree.IsAncestor(in, h)) {
        err << "hanging " << h << " joined to non-ancestor " << in;
        return err.str();
      }
    }
  }
  return "";
}

// Compares the engine's view of F with the census.
inline std::string CheckEngine(const vfc::UpdateState& st, const vfc::Graph& g,
                                        const Census& c) {
  std::ostringstream err;
  const vfc::StaticStructure& s = st.structure();
  const Vertex n = c.tree.n();
  const auto& comps = st.components();
  std::vector<Vertex> roots;
  for (const auto& comp : comps) roots.push_back(comp.root);
  if (!c.failed.empty() &&
      roots != std::vector<Vertex>(c.internal.begin(), c.internal.end())) {
    return "internal component roots differ";
  }
  for (const auto& comp : comps) {
    if (comp.boundary != c.boundary[comp.root]) {
      err << "boundary of C(" << comp.root << ") differs";
      return err.str();
    }
  }
  const vfc::FForest& forest = st.forest();
  for (std::size_t i = 0; i < forest.failed.size(); ++i) {
    if (forest.parent_vertex(i) != NearestFailedAncestor(c, forest.failed[i])) {
      err << "parent_F(" << forest.failed[i] << ") differs";
      return err.str();
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (c.dead[v]) continue;
    vfc::ComponentRef ref = st.Locate(v);
    bool internal = c.internal.count(c.root[v]) > 0;
    bool kind_ok = c.failed.empty() || (ref.kind == vfc::ComponentKind::kInternal) == internal;
    if (ref.root != c.root[v] || !kind_ok) {
      err << "Locate(" << v << ") differs";
      return err.str();
    }
  }
  if (c.failed.empty()) return "";

  // Connectivity among internal components against a search on G \ F.
  std::vector<vfc::NodeId> failed_nodes;
  for (Vertex f : c.failed) failed_nodes.push_back(s.tree().node(f));
  std::vector<int> label = ref::Labels(g.n(), g.Edges(), failed_nodes);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      bool want = label[s.tree().node(comps[i].root)] == label[s.tree().node(comps[j].root)];
      if (st.SameClass(static_cast<int>(i), static_cast<int>(j)) != want) {
        err << "classes of C(" << comps[i].root << ") and C(" << comps[j].root << ") differ";
        return err.str();
      }
    }
  }
  // Each reported edge is justified by back-edges of G \ F.
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (auto [a, b] : ref::DfsEdges(g, s.tree())) {
    if (c.dead[a] || c.dead[b] || c.root[a] == c.root[b]) continue;
    pairs.emplace(std::min(c.root[a], c.root[b]), std::max(c.root[a], c.root[b]));
  }
  auto joined = [&](Vertex r1, Vertex r2) {
    return pairs.count({std::min(r1, r2), std::max(r1, r2)}) > 0;
  };
  for (const auto& e : st.edges()) {
    bool ok = false;
    if (e.type == vfc::EdgeType::kType1) {
      ok = joined(e.a, e.b);
    } else {
      for (Vertex h = 1; h <= n && !ok; ++h) {
        if (c.dead[h] || c.root[h] != h || c.internal.count(h)) continue;
        ok = joined(h, e.a) && joined(h, e.b);
      }
    }
    if (!ok) {
      err << (e.type == vfc::EdgeType::kType1 ? "type-1" : "type-2") << " edge " << e.a << "-"
          << e.b << " has no witness";
      return err.str();
    }
  }
  return "";
}

}  // namespace checks
