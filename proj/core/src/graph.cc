#include "vfc/graph.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>

#include "vfc/errors.h"

namespace vfc {

Csr BuildSortedCsr(
    std::int32_t num_vertices,
    std::span<const std::pair<std::int32_t, std::int32_t>> edges) {
  const auto nv = static_cast<std::size_t>(num_vertices);
  // Every arc appears once per direction, so per-vertex counts are the same
  // whether bucketed by source or by target.
  std::vector<std::size_t> start(nv + 1, 0);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    ++start[u + 1];
    ++start[v + 1];
  }
  for (std::size_t i = 0; i < nv; ++i) start[i + 1] += start[i];
  const std::size_t arcs = start[nv];

  // Pass 1: bucket arcs by target. Pass 2: stable bucket by source, which
  // leaves each source's targets ascending.
  std::vector<std::pair<std::int32_t, std::int32_t>> by_target(arcs);
  {
    auto next = start;
    for (auto [u, v] : edges) {
      if (u == v) continue;
      by_target[next[v]++] = {u, v};
      by_target[next[u]++] = {v, u};
    }
  }
  std::vector<std::int32_t> sorted(arcs);
  {
    auto next = start;
    for (auto [src, dst] : by_target) sorted[next[src]++] = dst;
  }

  Csr csr;
  csr.offsets.assign(nv + 1, 0);
  csr.targets.reserve(arcs);
  for (std::size_t v = 0; v < nv; ++v) {
    std::int32_t last = -1;
    for (std::size_t k = start[v]; k < start[v + 1]; ++k) {
      if (sorted[k] == last) continue;
      last = sorted[k];
      csr.targets.push_back(last);
    }
    csr.offsets[v + 1] = csr.targets.size();
  }
  csr.targets.shrink_to_fit();
  return csr;
}

Graph Graph::FromEdges(NodeId n,
                       std::span<const std::pair<NodeId, NodeId>> edges) {
  Graph g;
  g.n_ = n;
  g.csr_ = BuildSortedCsr(n, edges);
  return g;
}

std::vector<std::pair<NodeId, NodeId>> Graph::Edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(m());
  for (NodeId u = 0; u < n_; ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

bool IsSkippable(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Parses exactly two non-negative integers separated by whitespace.
bool ParsePair(std::string_view line, long long& a, long long& b) {
  const char* p = line.data();
  const char* end = p + line.size();
  auto skip = [&] {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  };
  skip();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc() || r1.ptr == p) return false;
  p = r1.ptr;
  if (p == end || (*p != ' ' && *p != '\t')) return false;
  skip();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc() || r2.ptr == p) return false;
  p = r2.ptr;
  skip();
  return p == end;
}

}  // namespace

RawGraph LoadGraph(std::string_view text) {
  RawGraph g;
  bool have_header = false;
  long long declared_m = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (IsSkippable(line)) continue;

    long long a = 0;
    long long b = 0;
    if (!have_header) {
      if (!ParsePair(line, a, b)) {
        throw ParseError(line_no, "expected header \"n m\"");
      }
      if (a < 1) throw ParseError(line_no, "graph must have at least one vertex");
      if (a > std::numeric_limits<NodeId>::max() - 2) {
        throw ParseError(line_no, "too many vertices");
      }
      if (b < 0) throw ParseError(line_no, "negative edge count");
      g.n = static_cast<NodeId>(a);
      declared_m = b;
      g.edges.reserve(static_cast<std::size_t>(std::min<long long>(b, 1 << 24)));
      have_header = true;
      continue;
    }
    if (static_cast<long long>(g.edges.size()) == declared_m) {
      throw ParseError(line_no, "more edge lines than the declared " +
                                    std::to_string(declared_m));
    }
    if (!ParsePair(line, a, b)) {
      throw ParseError(line_no, "expected edge \"u v\"");
    }
    for (long long id : {a, b}) {
      if (id < 1 || id > g.n) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) +
                                      " outside [1," + std::to_string(g.n) +
                                      "]");
      }
    }
    g.edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header \"n m\"");
  if (static_cast<long long>(g.edges.size()) != declared_m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(declared_m) +
                                      " edges, found " +
                                      std::to_string(g.edges.size()));
  }
  return g;
}

RawGraph LoadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadGraph(buf.str());
}

std::string FormatGraph(const RawGraph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (auto [u, v] : g.edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph Normalize(const RawGraph& g) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    if (u < 1 || u > g.n || v < 1 || v > g.n) {
      throw ContractViolation("edge endpoint outside [1,n]");
    }
    edges.emplace_back(u - 1, v - 1);
  }
  return Graph::FromEdges(g.n, edges);
}

ComponentPartition SplitComponents(const Graph& g) {
  ComponentPartition p;
  const NodeId n = g.n();
  p.comp_id.assign(n, -1);
  p.local_id.assign(n, -1);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    if (p.comp_id[s] != -1) continue;
    const int c = p.count();
    queue.clear();
    queue.push_back(s);
    p.comp_id[s] = c;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors(queue[head])) {
        if (p.comp_id[w] == -1) {
          p.comp_id[w] = c;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      p.local_id[queue[i]] = static_cast<NodeId>(i);
    }
    p.members.push_back(queue);
  }

  std::vector<std::vector<std::pair<NodeId, NodeId>>> local_edges(p.count());
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) local_edges[p.comp_id[u]].emplace_back(p.local_id[u], p.local_id[v]);
    }
  }
  p.graphs.reserve(p.count());
  for (int c = 0; c < p.count(); ++c) {
    p.graphs.push_back(Graph::FromEdges(
        static_cast<NodeId>(p.members[c].size()), local_edges[c]));
  }
  return p;
}

}  // namespace vfc
