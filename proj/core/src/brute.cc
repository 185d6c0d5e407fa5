#include "vfc/brute.h"

#include <algorithm>
#include <deque>
#include <set>

namespace vfc::brute {

std::vector<int> ComponentLabels(int n, const EdgeList& edges, const std::vector<int>& failed,
                                 int base) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u - base].push_back(v - base);
    adj[v - base].push_back(u - base);
  }
  std::vector<char> dead(n, 0);
  for (int f : failed) dead[f - base] = 1;
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (dead[s] || label[s] != -1) continue;
    std::deque<int> queue{s};
    label[s] = next;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (!dead[w] && label[w] == -1) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool Connected(int n, const EdgeList& edges, const std::vector<int>& failed, int x, int y,
               int base) {
  auto label = ComponentLabels(n, edges, failed, base);
  return label[x - base] != -1 && label[x - base] == label[y - base];
}

bool IsAncestor(const std::vector<Vertex>& parent, Vertex a, Vertex d) {
  for (Vertex v = d; v != kNil; v = parent[v]) {
    if (v == a) return true;
  }
  return false;
}

Vertex Low(const std::vector<Vertex>& parent, const EdgeList& edges, Vertex v, int k) {
  std::set<Vertex> ends;
  for (auto [a, b] : edges) {
    if (parent[a] == b || parent[b] == a) continue;  // tree edge
    if (b < v && IsAncestor(parent, v, a)) ends.insert(b);
    if (a < v && IsAncestor(parent, v, b)) ends.insert(a);
  }
  if (static_cast<int>(ends.size()) < k) return kAbsent;
  return *std::next(ends.begin(), k - 1);
}

std::vector<TreeComponent> TreeComponents(const std::vector<Vertex>& parent,
                                          const std::vector<Vertex>& failed) {
  const int n = static_cast<int>(parent.size()) - 1;
  std::vector<char> dead(n + 1, 0);
  for (Vertex f : failed) dead[f] = 1;
  // Climb to the topmost non-failed ancestor reachable without crossing F.
  std::vector<Vertex> top(n + 1, kNil);
  for (Vertex v = 1; v <= n; ++v) {
    if (dead[v]) continue;
    Vertex u = v;
    while (parent[u] != kNil && !dead[parent[u]]) u = parent[u];
    top[v] = u;
  }
  std::vector<TreeComponent> out;
  for (Vertex v = 1; v <= n; ++v) {
    if (dead[v] || top[v] != v) continue;
    TreeComponent c;
    c.root = v;
    for (Vertex u = 1; u <= n; ++u) {
      if (!dead[u] && top[u] == v) c.members.push_back(u);
    }
    for (Vertex f : failed) {
      if (IsAncestor(parent, v, f)) c.internal = true;
      if (parent[f] != kNil && !dead[parent[f]] && top[parent[f]] == v) c.boundary.push_back(f);
    }
    std::sort(c.boundary.begin(), c.boundary.end());
    c.boundary.erase(std::unique(c.boundary.begin(), c.boundary.end()), c.boundary.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace vfc::brute
