#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "tassel/graph.hpp"
#include "tassel/rng.hpp"
#include "tassel/treewidth.hpp"

namespace oracle {

using tassel::Graph;
using tassel::Vertex;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Width of the best elimination ordering, by trying every permutation.
inline int treewidth_by_permutations(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return -1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n - 1;
  do {
    auto a = matrix(g);
    std::vector<bool> gone(n, false);
    int width = 0;
    for (int v : perm) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (!gone[u] && a[v][u]) nb.push_back(u);
      width = std::max(width, static_cast<int>(nb.size()));
      if (width >= best) break;
      for (int x : nb)
        for (int y : nb)
          if (x != y) a[x][y] = true;
      gone[v] = true;
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Maximum number of internally disjoint x-y paths: enumerate the interiors of
// all simple x-y paths, then search for the largest pairwise disjoint family.
inline int path_packing(const Graph& g, Vertex x, Vertex y) {
  const int n = g.vertex_count();
  auto a = matrix(g);
  std::vector<std::uint32_t> interiors;
  std::vector<bool> on(n, false);
  std::function<void(int, std::uint32_t)> walk = [&](int v, std::uint32_t inner) {
    for (int u = 0; u < n; ++u) {
      if (!a[v][u] || on[u]) continue;
      if (u == y) {
        if (v != x) interiors.push_back(inner);
        continue;
      }
      on[u] = true;
      walk(u, inner | (1u << u));
      on[u] = false;
    }
  };
  on[x] = true;
  walk(x, 0);
  std::sort(interiors.begin(), interiors.end());
  interiors.erase(std::unique(interiors.begin(), interiors.end()), interiors.end());
  // keep only inclusion-minimal interiors
  std::vector<std::uint32_t> minimal;
  for (auto s : interiors) {
    bool dominated = false;
    for (auto t : interiors)
      if (t != s && (t & s) == t) dominated = true;
    if (!dominated) minimal.push_back(s);
  }
  int best = 0;
  std::function<void(std::size_t, std::uint32_t, int)> pack = [&](std::size_t i, std::uint32_t used, int count) {
    best = std::max(best, count);
    if (count + static_cast<int>(minimal.size() - i) <= best) return;
    for (std::size_t k = i; k < minimal.size(); ++k)
      if ((minimal[k] & used) == 0) pack(k + 1, used | minimal[k], count + 1);
  };
  pack(0, 0, 0);
  return best + (a[x][y] ? 1 : 0);
}

// Induced containment by trying every injective map.
inline bool contains_induced(const Graph& host, const Graph& pattern) {
  const int k = pattern.vertex_count(), n = host.vertex_count();
  if (k > n) return false;
  auto h = matrix(host), p = matrix(pattern);
  std::vector<int> map(k, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int i) {
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (p[i][j] != h[v][map[j]]) ok = false;
      if (!ok) continue;
      used[v] = true;
      map[i] = v;
      if (rec(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(0);
}

inline std::string reverse(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

// Plain substring scan, pattern or its reverse.
inline bool occurs(const std::string& text, const std::string& p) {
  for (const auto& q : {p, reverse(p)})
    for (std::size_t i = 0; i + q.size() <= text.size(); ++i)
      if (text.compare(i, q.size(), q) == 0) return true;
  return false;
}

inline bool padded(const std::string& s, int c) {
  if (static_cast<int>(s.size()) < 2 * c + 1) return false;
  bool one = false;
  for (char ch : s) one |= ch == '1';
  for (int i = 0; i < c; ++i)
    if (s[i] != '0' || s[s.size() - 1 - i] != '0') return false;
  return one;
}

inline std::string binary(std::uint64_t code, int len) {
  std::string s;
  for (int i = len - 1; i >= 0; --i) s += ((code >> i) & 1) ? '1' : '0';
  return s;
}

// Tree decomposition axioms checked directly: the tree is connected and
// acyclic, every vertex and edge is covered, and the bags holding a vertex
// are connected in the tree (found by search, not by counting).
inline bool decomposition_valid(const Graph& g, const tassel::TreeDecomposition& td) {
  const int b = static_cast<int>(td.bags.size()), n = g.vertex_count();
  if (b == 0) return n == 0;
  if (static_cast<int>(td.tree_edges.size()) != b - 1) return false;
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.tree_edges) {
    if (x < 0 || y < 0 || x >= b || y >= b || x == y) return false;
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  auto reach = [&](int from, const std::function<bool(int)>& allowed) {
    std::vector<bool> seen(b, false);
    std::vector<int> stack = {from};
    seen[from] = true;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j : adj[i])
        if (!seen[j] && allowed(j)) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    return seen;
  };
  auto all = reach(0, [](int) { return true; });
  if (std::count(all.begin(), all.end(), true) != b) return false;
  auto has = [&](int i, Vertex v) { return std::find(td.bags[i].begin(), td.bags[i].end(), v) != td.bags[i].end(); };
  for (int i = 0; i < b; ++i)
    for (Vertex v : td.bags[i])
      if (v < 0 || v >= n) return false;
  for (Vertex v = 0; v < n; ++v) {
    int first = -1, count = 0;
    for (int i = 0; i < b; ++i)
      if (has(i, v)) {
        if (first == -1) first = i;
        ++count;
      }
    if (first == -1) return false;
    auto seen = reach(first, [&](int j) { return has(j, v); });
    if (std::count(seen.begin(), seen.end(), true) != count) return false;
  }
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (int i = 0; i < b && !ok; ++i) ok = has(i, u) && has(i, v);
    if (!ok) return false;
  }
  return true;
}

inline Graph random_graph(tassel::SplitMix64& rng, int n, int percent) {
  std::vector<tassel::Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform(0, 99) < percent) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

}  // namespace oracle
