#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tassel/vertex_set.hpp"

namespace tassel {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
// Immutable once built; use Graph::from_edges or the free operations below.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

  // Throws std::invalid_argument on an out-of-range id or a self-loop.
  // Duplicate pairs collapse into one edge.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside 0.." + std::to_string(n - 1));
      if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
    }
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const { return n_; }
  int edge_count() const {
    int total = 0;
    for (const auto& row : adj_) total += row.size();
    return total / 2;
  }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      adj_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  VertexSet all() const { return VertexSet::full(n_); }

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
      throw std::invalid_argument("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

inline Graph graph_from_edges(int n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> host id, ascending
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.original = keep.members();
  std::vector<Vertex> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[out.original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : out.original)
    (g.neighbors(u) & keep).for_each([&](Vertex v) {
      if (u < v) edges.emplace_back(index[u], index[v]);
    });
  out.graph = Graph::from_edges(static_cast<int>(out.original.size()), edges);
  return out;
}

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  VertexSet s(g.vertex_count());
  for (Vertex v : keep) {
    require_vertex(g, v);
    s.insert(v);
  }
  return induced_subgraph(g, s);
}

// Vertex i of the result is the i-th edge of f.edges().
inline Graph line_graph(const Graph& f) {
  auto es = f.edges();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return Graph::from_edges(static_cast<int>(es.size()), out);
}

// extra[i] new internal vertices on the i-th edge of f.edges(); new vertices are
// numbered from f.vertex_count() upwards in edge order, from the lower endpoint.
inline Graph subdivide(const Graph& f, std::span<const int> extra) {
  auto es = f.edges();
  if (extra.size() != es.size())
    throw std::invalid_argument("subdivision vector has " + std::to_string(extra.size()) +
                                " entries but the graph has " + std::to_string(es.size()) + " edges");
  int n = f.vertex_count();
  for (int e : extra) {
    if (e < 0) throw std::invalid_argument("negative subdivision count");
    n += e;
  }
  std::vector<Edge> out;
  Vertex next = f.vertex_count();
  for (std::size_t i = 0; i < es.size(); ++i) {
    Vertex prev = es[i].first;
    for (int k = 0; k < extra[i]; ++k) {
      out.emplace_back(prev, next);
      prev = next++;
    }
    out.emplace_back(prev, es[i].second);
  }
  return Graph::from_edges(n, out);
}

inline Graph subdivide(const Graph& f, int uniform_extra) {
  std::vector<int> extra(f.edge_count(), uniform_extra);
  return subdivide(f, extra);
}

// A subdivision replacing each edge by a path of length at most r+1.
inline bool is_leq_r_subdivision(std::span<const int> extra, int r) {
  return std::all_of(extra.begin(), extra.end(), [r](int e) { return e <= r; });
}
// Every edge replaced by a path of length at least two.
inline bool is_proper_subdivision(std::span<const int> extra) {
  return std::all_of(extra.begin(), extra.end(), [](int e) { return e >= 1; });
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), es);
}

inline Graph add_isolated_vertex(const Graph& g) {
  return disjoint_union(g, Graph(1));
}

// Components of g[within], each sorted ascending, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& within) {
  std::vector<std::vector<Vertex>> out;
  VertexSet seen(g.vertex_count());
  within.for_each([&](Vertex s) {
    if (seen.contains(s)) return;
    VertexSet comp(g.vertex_count());
    comp.insert(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet grow(g.vertex_count());
      frontier.for_each([&](Vertex v) { grow |= g.neighbors(v); });
      grow &= within;
      grow -= comp;
      comp |= grow;
      frontier = grow;
    }
    seen |= comp;
    out.push_back(comp.members());
  });
  return out;
}

inline std::vector<std::vector<Vertex>> components(const Graph& g) { return components(g, g.all()); }

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// Vertices of a path graph in path order starting from the smaller end;
// nullopt if g is not a path. K_1 is a path; the empty graph is not.
inline std::optional<std::vector<Vertex>> path_order(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  if (g.edge_count() != n - 1) return std::nullopt;
  Vertex start = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) <= 1 && start == -1) start = v;
  }
  if (start == -1) return std::nullopt;
  std::vector<Vertex> order{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex nxt = -1;
    g.neighbors(cur).for_each([&](Vertex w) {
      if (w != prev) nxt = w;
    });
    if (nxt == -1) break;
    prev = cur;
    cur = nxt;
    order.push_back(cur);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

inline bool is_path(const Graph& g) { return path_order(g).has_value(); }

inline bool is_stable_set(const Graph& g, const VertexSet& x) {
  bool ok = true;
  x.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(x)) ok = false;
  });
  return ok;
}

inline bool are_anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw std::invalid_argument("anticompleteness asked for overlapping sets");
  bool ok = true;
  x.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(y)) ok = false;
  });
  return ok;
}

// seq lists distinct vertices, consecutive ones adjacent, and no other
// adjacencies among them: g[seq] is a path traversed in this order.
inline bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  VertexSet seen(g.vertex_count());
  for (Vertex v : seq) {
    if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
  return true;
}

// Distinct vertices with consecutive ones adjacent (chords allowed).
inline bool is_simple_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  VertexSet seen(g.vertex_count());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex v = seq[i];
    if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
  }
  return true;
}

// Two-colouring by BFS in id order; nullopt if g has an odd cycle.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      bool bad = false;
      g.neighbors(v).for_each([&](Vertex w) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          bad = true;
        }
      });
      if (bad) return std::nullopt;
    }
  }
  return side;
}

inline VertexSet neighborhood_of_set(const Graph& g, const VertexSet& x) {
  VertexSet out(g.vertex_count());
  x.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out;
}

}  // namespace tassel
