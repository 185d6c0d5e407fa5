#include "vfc/tools/generator.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace vfc::tools {
namespace {

std::size_t MaxEdges(NodeId n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

std::uint64_t Key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Adds random edges until `g` has `m` of them.
void FillRandom(Rng& rng, RawGraph& g, std::size_t m) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  for (auto [u, v] : g.edges) seen.insert(Key(u, v));
  if (m * 2 > MaxEdges(g.n)) {
    // Dense: sample from the complement list directly.
    std::vector<std::pair<NodeId, NodeId>> rest;
    for (NodeId u = 1; u <= g.n; ++u) {
      for (NodeId v = u + 1; v <= g.n; ++v) {
        if (!seen.count(Key(u, v))) rest.emplace_back(u, v);
      }
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    rest.resize(m - g.edges.size());
    g.edges.insert(g.edges.end(), rest.begin(), rest.end());
    return;
  }
  std::uniform_int_distribution<NodeId> pick(1, g.n);
  while (g.edges.size() < m) {
    NodeId u = pick(rng);
    NodeId v = pick(rng);
    if (u == v || !seen.insert(Key(u, v)).second) continue;
    g.edges.emplace_back(u, v);
  }
}

}  // namespace

RawGraph RandomConnected(Rng& rng, NodeId n, std::size_t m) {
  m = std::clamp<std::size_t>(m, n - 1, MaxEdges(n));
  std::vector<NodeId> label(n);
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  RawGraph g{n, {}};
  g.edges.reserve(m);
  for (NodeId i = 1; i < n; ++i) {
    std::uniform_int_distribution<NodeId> pick(0, i - 1);
    g.edges.emplace_back(label[i], label[pick(rng)]);
  }
  FillRandom(rng, g, m);
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

RawGraph RandomGraph(Rng& rng, NodeId n, std::size_t m) {
  RawGraph g{n, {}};
  FillRandom(rng, g, std::min(m, MaxEdges(n)));
  return g;
}

RawGraph Path(NodeId n) {
  RawGraph g{n, {}};
  for (NodeId v = 1; v < n; ++v) g.edges.emplace_back(v, v + 1);
  return g;
}

RawGraph Cycle(NodeId n) {
  RawGraph g = Path(n);
  if (n >= 3) g.edges.emplace_back(n, 1);
  return g;
}

RawGraph Star(NodeId n) {
  RawGraph g{n, {}};
  for (NodeId v = 2; v <= n; ++v) g.edges.emplace_back(1, v);
  return g;
}

RawGraph Grid(NodeId rows, NodeId cols) {
  RawGraph g{rows * cols, {}};
  auto id = [cols](NodeId r, NodeId c) { return r * cols + c + 1; };
  for (NodeId r = 0; r < rows; ++r) {
    for (NodeId c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return g;
}

RawGraph Complete(NodeId n) {
  RawGraph g{n, {}};
  for (NodeId u = 1; u <= n; ++u) {
    for (NodeId v = u + 1; v <= n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

RawGraph CorpusGraph(Rng& rng, NodeId min_n, NodeId max_n) {
  NodeId n = std::uniform_int_distribution<NodeId>(min_n, max_n)(rng);
  int family = std::uniform_int_distribution<int>(0, 19)(rng);
  switch (family) {
    case 0:
      return Cycle(n);
    case 1: {
      NodeId rows = std::max<NodeId>(1, static_cast<NodeId>(std::sqrt(n)));
      return Grid(rows, std::max<NodeId>(1, n / rows));
    }
    case 2:
      return RandomConnected(rng, n, n - 1);  // tree
    case 3:
      return Complete(std::min<NodeId>(n, 9));  // m <= 4n keeps K_n small
    default: {
      std::size_t hi = std::min<std::size_t>(4 * static_cast<std::size_t>(n), MaxEdges(n));
      std::size_t m = std::uniform_int_distribution<std::size_t>(n - 1, hi)(rng);
      return RandomConnected(rng, n, m);
    }
  }
}

}  // namespace vfc::tools
