#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tassel/graph.hpp"

namespace tassel {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each sorted ascending
  std::vector<std::pair<int, int>> tree_edges;

  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
  }
};

struct DecompositionCheck {
  bool ok = true;
  std::string clause;  // "bags", "tree", "vertex-coverage", "edge-coverage", "connectivity"
  std::string message;
};

// Checks the definition directly: bag entries in range, the bag graph is a
// tree, every vertex and every edge lies in some bag, and the bags holding a
// vertex form a connected subtree.
inline DecompositionCheck verify_decomposition(const Graph& g, const TreeDecomposition& td) {
  auto fail = [](std::string clause, std::string message) {
    return DecompositionCheck{false, std::move(clause), std::move(message)};
  };
  const int n = g.vertex_count();
  const int b = static_cast<int>(td.bags.size());
  for (int i = 0; i < b; ++i)
    for (Vertex v : td.bags[i])
      if (v < 0 || v >= n) return fail("bags", "bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v));
  if (b == 0) {
    if (n == 0) return {};
    return fail("tree", "no bags");
  }
  if (static_cast<int>(td.tree_edges.size()) != b - 1)
    return fail("tree", std::to_string(td.tree_edges.size()) + " tree edges for " + std::to_string(b) + " bags");
  std::vector<int> parent(b);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [x, y] : td.tree_edges) {
    if (x < 0 || y < 0 || x >= b || y >= b) return fail("tree", "tree edge to unknown bag");
    int rx = find(x), ry = find(y);
    if (rx == ry) return fail("tree", "tree edges contain a cycle");
    parent[rx] = ry;
  }
  std::vector<std::vector<int>> holding(n);
  for (int i = 0; i < b; ++i)
    for (Vertex v : td.bags[i]) holding[v].push_back(i);
  for (Vertex v = 0; v < n; ++v)
    if (holding[v].empty()) return fail("vertex-coverage", "vertex " + std::to_string(v) + " is in no bag");
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holding[u])
      if (std::find(td.bags[i].begin(), td.bags[i].end(), v) != td.bags[i].end()) {
        covered = true;
        break;
      }
    if (!covered)
      return fail("edge-coverage", "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
  }
  // the bags holding v span a subtree iff they are joined by |holding|-1 tree edges
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> in(b, false);
    for (int i : holding[v]) in[i] = true;
    int inner = 0;
    for (auto [x, y] : td.tree_edges)
      if (in[x] && in[y]) ++inner;
    if (inner != static_cast<int>(holding[v].size()) - 1)
      return fail("connectivity", "bags holding vertex " + std::to_string(v) + " are not connected");
  }
  return {};
}

class TreewidthLimitExceeded : public std::runtime_error {
 public:
  TreewidthLimitExceeded(int n, int limit)
      : std::runtime_error("graph has " + std::to_string(n) + " vertices, exact treewidth limit is " +
                           std::to_string(limit) + "; use the lower bound instead") {}
};

namespace detail {

// Masks over at most 32 vertices of one component.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::vector<Vertex> original;
};

inline MaskGraph mask_graph(const Graph& g, const std::vector<Vertex>& vs) {
  MaskGraph m;
  m.n = static_cast<int>(vs.size());
  m.original = vs;
  m.adj.assign(m.n, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (g.adjacent(vs[i], vs[j])) m.adj[i] |= std::uint32_t{1} << j;
  return m;
}

// Vertices outside s + {v} reachable from v through s.
inline std::uint32_t q_set(const MaskGraph& m, std::uint32_t s, int v) {
  std::uint32_t reach = std::uint32_t{1} << v, frontier = reach, boundary = 0;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= m.adj[std::countr_zero(f)];
    boundary |= next & ~s;
    next &= s & ~reach;
    reach |= next;
    frontier = next;
  }
  return boundary & ~(std::uint32_t{1} << v);
}

// Greedy min-fill elimination ordering (ties: smaller degree, then lower id)
// and its width.
inline std::pair<int, std::vector<int>> min_fill_ordering(const MaskGraph& m) {
  std::vector<std::uint32_t> adj = m.adj;
  std::uint32_t alive = m.n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << m.n) - 1);
  std::vector<int> order;
  int width = 0;
  for (int step = 0; step < m.n; ++step) {
    int best = -1;
    long best_fill = 0;
    int best_deg = 0;
    for (int v = 0; v < m.n; ++v) {
      if (!((alive >> v) & 1)) continue;
      std::uint32_t nb = adj[v] & alive;
      long fill = 0;
      for (std::uint32_t x = nb; x; x &= x - 1) {
        int a = std::countr_zero(x);
        fill += std::popcount(nb & ~adj[a] & ~(std::uint32_t{1} << a));
      }
      int deg = std::popcount(nb);
      if (best == -1 || fill < best_fill || (fill == best_fill && deg < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = deg;
      }
    }
    std::uint32_t nb = adj[best] & alive;
    width = std::max(width, std::popcount(nb));
    for (std::uint32_t x = nb; x; x &= x - 1) adj[std::countr_zero(x)] |= nb & ~(std::uint32_t{1} << std::countr_zero(x));
    alive &= ~(std::uint32_t{1} << best);
    order.push_back(best);
  }
  return {width, order};
}

inline int ordering_width(const MaskGraph& m, const std::vector<int>& order) {
  std::uint32_t s = 0;
  int w = 0;
  for (int v : order) {
    w = std::max(w, std::popcount(q_set(m, s, v)));
    s |= std::uint32_t{1} << v;
  }
  return w;
}

}  // namespace detail

// Largest minimum degree over the min-degree elimination sequence.
inline int degeneracy(const Graph& g) {
  VertexSet alive = g.all();
  int best = 0;
  for (int step = 0; step < g.vertex_count(); ++step) {
    Vertex pick = -1;
    int pick_deg = 0;
    alive.for_each([&](Vertex v) {
      int d = (g.neighbors(v) & alive).size();
      if (pick == -1 || d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    best = std::max(best, pick_deg);
    alive.erase(pick);
  }
  return best;
}

// Minor-min-width: repeatedly record the minimum degree and contract a
// minimum-degree vertex into its minimum-degree neighbour.
inline int minor_min_width(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> adj;
  for (Vertex v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
  VertexSet alive = g.all();
  int best = 0;
  while (!alive.empty()) {
    Vertex v = -1;
    int dv = 0;
    alive.for_each([&](Vertex x) {
      int d = adj[x].size();
      if (v == -1 || d < dv) {
        v = x;
        dv = d;
      }
    });
    best = std::max(best, dv);
    if (dv == 0) {
      alive.erase(v);
      continue;
    }
    Vertex u = -1;
    int du = 0;
    adj[v].for_each([&](Vertex x) {
      int d = adj[x].size();
      if (u == -1 || d < du) {
        u = x;
        du = d;
      }
    });
    adj[v].for_each([&](Vertex x) {
      adj[x].erase(v);
      if (x != u) {
        adj[x].insert(u);
        adj[u].insert(x);
      }
    });
    adj[v] = VertexSet(n);
    alive.erase(v);
  }
  return best;
}

// A sound lower bound: max of degeneracy and minor-min-width.
inline int treewidth_lowerbound(const Graph& g) {
  return std::max(degeneracy(g), minor_min_width(g));
}

// Exact test for treewidth <= 2: the graph reduces to nothing by deleting
// vertices of degree at most one and suppressing vertices of degree two
// (joining their neighbours).
inline bool has_treewidth_at_most_two(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> adj;
  for (Vertex v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
  VertexSet alive = g.all();
  bool changed = true;
  while (changed && !alive.empty()) {
    changed = false;
    for (Vertex v : alive.members()) {
      int d = adj[v].size();
      if (d <= 1) {
        adj[v].for_each([&](Vertex x) { adj[x].erase(v); });
      } else if (d == 2) {
        Vertex a = adj[v].first(), b = adj[v].next(a + 1);
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b);
        adj[b].insert(a);
      } else {
        continue;
      }
      adj[v] = VertexSet(n);
      alive.erase(v);
      changed = true;
    }
  }
  return alive.empty();
}

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
  std::vector<Vertex> ordering;  // elimination ordering realizing the width
};

// Merges every bag into a neighbouring bag that contains it, until no tree
// edge joins nested bags.
inline TreeDecomposition reduce_decomposition(TreeDecomposition td) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
      auto [x, y] = td.tree_edges[e];
      auto inside = [&](int small, int big) {
        return std::includes(td.bags[big].begin(), td.bags[big].end(), td.bags[small].begin(), td.bags[small].end());
      };
      int drop = -1, keep = -1;
      if (inside(x, y)) drop = x, keep = y;
      else if (inside(y, x)) drop = y, keep = x;
      if (drop == -1) continue;
      td.tree_edges.erase(td.tree_edges.begin() + e);
      for (auto& [a, b] : td.tree_edges) {
        if (a == drop) a = keep;
        if (b == drop) b = keep;
      }
      int last = static_cast<int>(td.bags.size()) - 1;
      if (drop != last) {
        td.bags[drop] = std::move(td.bags[last]);
        for (auto& [a, b] : td.tree_edges) {
          if (a == last) a = drop;
          if (b == last) b = drop;
        }
      }
      td.bags.pop_back();
      changed = true;
      break;
    }
  }
  for (auto& [a, b] : td.tree_edges)
    if (a > b) std::swap(a, b);
  std::sort(td.tree_edges.begin(), td.tree_edges.end());
  return td;
}

// Decomposition from an elimination ordering of g: the bag of v is v plus its
// later neighbours in the fill graph, hung below the bag of the earliest of
// those neighbours. Bags of separate components are chained together.
inline TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<VertexSet> adj;
  for (Vertex v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
  TreeDecomposition td;
  std::vector<int> parent_vertex(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet later(n);
    adj[v].for_each([&](Vertex w) {
      if (position[w] > i) later.insert(w);
    });
    std::vector<Vertex> bag = later.members();
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(bag);
    Vertex earliest = -1;
    later.for_each([&](Vertex w) {
      if (earliest == -1 || position[w] < position[earliest]) earliest = w;
      adj[w] |= later;
      adj[w].erase(w);
    });
    parent_vertex[v] = earliest;
  }
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    Vertex p = parent_vertex[order[i]];
    if (p != -1) {
      td.tree_edges.emplace_back(i, position[p]);
    } else {
      if (previous_root != -1) td.tree_edges.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return reduce_decomposition(td);
}

// Exact treewidth by dynamic programming over vertex subsets of each
// component: TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|),
// where Q(S, v) is the set of vertices outside S + v reachable from v
// through S. States that cannot beat the min-fill upper bound are pruned;
// the DP is skipped when the lower bound already meets it. Among optimal
// orderings the one picking the smallest vertex id last at each step wins.
inline TreewidthResult treewidth_exact(const Graph& g, int vertex_limit = 22) {
  if (g.vertex_count() > vertex_limit) throw TreewidthLimitExceeded(g.vertex_count(), vertex_limit);
  if (vertex_limit > 30) throw std::invalid_argument("vertex limit above 30 is not supported");
  TreewidthResult out;
  out.width = g.vertex_count() == 0 ? -1 : 0;
  for (const auto& comp : components(g)) {
    detail::MaskGraph m = detail::mask_graph(g, comp);
    auto [ub, ub_order] = detail::min_fill_ordering(m);
    int lb = treewidth_lowerbound(induced_subgraph(g, std::span<const Vertex>(comp)).graph);
    std::vector<int> best_order = ub_order;
    int width = ub;
    if (lb < ub) {
      const std::uint32_t full = (std::uint32_t{1} << m.n) - 1;
      const std::uint8_t inf = 0xff;
      std::vector<std::uint8_t> value(std::size_t{1} << m.n, inf), last(std::size_t{1} << m.n, 0);
      value[0] = 0;
      for (std::uint32_t t = 1; t <= full; ++t) {
        std::uint8_t best = inf;
        int pick = -1;
        for (std::uint32_t x = t; x; x &= x - 1) {
          int v = std::countr_zero(x);
          std::uint32_t s = t & ~(std::uint32_t{1} << v);
          if (value[s] == inf) continue;
          int q = std::popcount(detail::q_set(m, s, v));
          int cand = std::max<int>(value[s], q);
          if (cand < ub && cand < best) {
            best = static_cast<std::uint8_t>(cand);
            pick = v;
          }
        }
        if (pick != -1) {
          value[t] = best;
          last[t] = static_cast<std::uint8_t>(pick);
        }
      }
      if (value[full] != inf) {
        width = value[full];
        std::vector<int> rev;
        for (std::uint32_t t = full; t; t &= ~(std::uint32_t{1} << last[t])) rev.push_back(last[t]);
        best_order.assign(rev.rbegin(), rev.rend());
      }
    }
    out.width = std::max(out.width, width);
    for (int i : best_order) out.ordering.push_back(m.original[i]);
  }
  out.decomposition = decomposition_from_ordering(g, out.ordering);
  return out;
}

}  // namespace tassel
