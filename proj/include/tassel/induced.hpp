#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "tassel/graph.hpp"

namespace tassel {

// Node-expansion counter shared by the search routines. A negative limit
// means unlimited. Counting expansions rather than time keeps verdicts
// reproducible.
class NodeBudget {
 public:
  NodeBudget() = default;
  explicit NodeBudget(long long limit) : limit_(limit) {}
  static NodeBudget unlimited() { return NodeBudget(-1); }

  bool spend() {
    if (limit_ >= 0 && used_ >= limit_) {
      exhausted_ = true;
      return false;
    }
    ++used_;
    return true;
  }
  bool exhausted() const { return exhausted_; }
  long long used() const { return used_; }
  long long limit() const { return limit_; }

 private:
  long long limit_ = -1;
  long long used_ = 0;
  bool exhausted_ = false;
};

// mapping[pattern vertex] = host vertex.
struct Embedding {
  std::vector<Vertex> mapping;
};

enum class SearchStatus { found, none, exhausted };

struct InducedSearchResult {
  SearchStatus status = SearchStatus::none;
  Embedding embedding;
};

inline bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
  const auto& m = e.mapping;
  if (static_cast<int>(m.size()) != pattern.vertex_count()) return false;
  VertexSet used(host.vertex_count());
  for (Vertex h : m) {
    if (h < 0 || h >= host.vertex_count() || used.contains(h)) return false;
    used.insert(h);
  }
  for (Vertex u = 0; u < pattern.vertex_count(); ++u)
    for (Vertex v = u + 1; v < pattern.vertex_count(); ++v)
      if (pattern.adjacent(u, v) != host.adjacent(m[u], m[v])) return false;
  return true;
}

namespace detail {

// Pattern vertices in search order: each next vertex has the most already
// placed neighbours, then the highest degree, then the lowest id.
inline std::vector<Vertex> induced_search_order(const Graph& h) {
  int n = h.vertex_count();
  std::vector<Vertex> order;
  std::vector<int> placed_nbrs(n, 0);
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && h.degree(v) > h.degree(best)))
        best = v;
    }
    placed[best] = true;
    order.push_back(best);
    h.neighbors(best).for_each([&](Vertex w) { ++placed_nbrs[w]; });
  }
  return order;
}

class InducedSearch {
 public:
  using Visitor = std::function<bool(const Embedding&)>;  // return false to stop

  InducedSearch(const Graph& pattern, const Graph& host, NodeBudget& budget)
      : h_(pattern), g_(host), budget_(budget), order_(induced_search_order(pattern)),
        map_(pattern.vertex_count(), -1) {}

  // Visits embeddings in deterministic order. Returns none/found/exhausted
  // where "found" means at least one embedding was visited.
  SearchStatus run(const Visitor& visit) {
    visit_ = &visit;
    found_ = false;
    stopped_ = false;
    if (h_.vertex_count() > g_.vertex_count()) return SearchStatus::none;
    VertexSet used(g_.vertex_count());
    extend(0, used);
    if (found_) return SearchStatus::found;
    return budget_.exhausted() ? SearchStatus::exhausted : SearchStatus::none;
  }

 private:
  void extend(std::size_t depth, VertexSet& used) {
    if (depth == order_.size()) {
      found_ = true;
      Embedding e{map_};
      if (!(*visit_)(e)) stopped_ = true;
      return;
    }
    Vertex u = order_[depth];
    VertexSet cand = g_.all() - used;
    for (std::size_t i = 0; i < depth; ++i) {
      Vertex w = order_[i];
      if (h_.adjacent(u, w))
        cand &= g_.neighbors(map_[w]);
      else
        cand -= g_.neighbors(map_[w]);
    }
    int need = h_.degree(u);
    for (Vertex v = cand.first(); v != -1; v = cand.next(v + 1)) {
      if (g_.degree(v) < need) continue;
      if (!budget_.spend()) return;
      map_[u] = v;
      used.insert(v);
      extend(depth + 1, used);
      used.erase(v);
      map_[u] = -1;
      if (stopped_ || budget_.exhausted()) return;
    }
  }

  const Graph& h_;
  const Graph& g_;
  NodeBudget& budget_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  const Visitor* visit_ = nullptr;
  bool found_ = false;
  bool stopped_ = false;
};

}  // namespace detail

// Induced embedding of pattern into host, searched by backtracking with
// ascending host ids. "none" is exact only if the budget never ran out.
inline InducedSearchResult find_induced(const Graph& pattern, const Graph& host, NodeBudget& budget) {
  InducedSearchResult result;
  detail::InducedSearch search(pattern, host, budget);
  result.status = search.run([&](const Embedding& e) {
    result.embedding = e;
    return false;
  });
  return result;
}

inline InducedSearchResult find_induced(const Graph& pattern, const Graph& host) {
  NodeBudget unlimited;
  return find_induced(pattern, host, unlimited);
}

inline InducedSearchResult find_induced(const Graph& pattern, const Graph& host, long long limit) {
  NodeBudget budget(limit);
  return find_induced(pattern, host, budget);
}

inline bool contains_induced(const Graph& host, const Graph& pattern) {
  return find_induced(pattern, host).status == SearchStatus::found;
}

// Calls visit for every induced embedding (all of them, including those that
// differ by a pattern automorphism).
inline void for_each_induced(const Graph& pattern, const Graph& host,
                             const std::function<bool(const Embedding&)>& visit) {
  NodeBudget unlimited;
  detail::InducedSearch search(pattern, host, unlimited);
  search.run(visit);
}

inline std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return find_induced(a, b).status == SearchStatus::found;
}

// Canonical code for graphs on at most 16 vertices: the sorted degree
// sequence followed by the lexicographically largest lower-triangle adjacency
// string over vertex orders that list degrees in non-increasing order.
inline std::string canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw std::invalid_argument("canonical_code supports at most 16 vertices");
  std::vector<int> deg_order;
  for (Vertex v = 0; v < n; ++v) deg_order.push_back(g.degree(v));
  std::sort(deg_order.rbegin(), deg_order.rend());

  std::string prefix;
  for (int d : deg_order) prefix += static_cast<char>('a' + d);
  prefix += '|';

  std::string best, current;
  bool have_best = false;
  std::vector<Vertex> pos(n, -1);
  std::vector<bool> used(n, false);

  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!have_best || current > best) {
        best = current;
        have_best = true;
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || g.degree(v) != deg_order[i]) continue;
      std::size_t mark = current.size();
      for (int j = 0; j < i; ++j) current += g.adjacent(v, pos[j]) ? '1' : '0';
      if (have_best && current.compare(0, current.size(), best, 0, current.size()) < 0) {
        current.resize(mark);
        continue;
      }
      used[v] = true;
      pos[i] = v;
      rec(i + 1);
      used[v] = false;
      current.resize(mark);
    }
  };
  rec(0);
  return prefix + best;
}

}  // namespace tassel
