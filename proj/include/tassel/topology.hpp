#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tassel/graph.hpp"
#include "tassel/induced.hpp"

namespace tassel {

// Reduced multigraph of a graph: branch vertices are the vertices of degree
// other than two, and chains are the maximal paths between them whose
// interior vertices have degree two. A component that is a cycle gets one
// pseudo-branch (its smallest vertex) carrying a single loop chain.
struct Topology {
  struct Chain {
    int a = 0, b = 0;             // branch indices, a <= b
    std::vector<Vertex> vertices;  // from branch a to branch b inclusive
    int length() const { return static_cast<int>(vertices.size()) - 1; }
  };

  std::vector<Vertex> branch;  // host vertex of each branch
  std::vector<bool> pseudo;    // true for the stand-in vertex of a cycle component
  std::vector<int> degree;     // graph degree of each branch vertex
  std::vector<Chain> chains;

  int branch_count() const { return static_cast<int>(branch.size()); }

  // Sorted chain lengths per ordered branch pair (i <= j).
  std::map<std::pair<int, int>, std::vector<int>> groups() const {
    std::map<std::pair<int, int>, std::vector<int>> g;
    for (const auto& c : chains) g[{c.a, c.b}].push_back(c.length());
    for (auto& [k, v] : g) std::sort(v.begin(), v.end());
    return g;
  }
};

inline Topology topology_of(const Graph& g) {
  Topology t;
  const int n = g.vertex_count();
  std::vector<int> branch_index(n, -1);
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) {
      branch_index[v] = t.branch_count();
      t.branch.push_back(v);
      t.pseudo.push_back(false);
      t.degree.push_back(g.degree(v));
    }
  std::vector<VertexSet> used_edge(n, VertexSet(n));
  VertexSet covered(n);
  auto walk = [&](Vertex start, Vertex first) {
    Topology::Chain c;
    c.vertices = {start};
    Vertex prev = start, cur = first;
    used_edge[start].insert(first);
    used_edge[first].insert(start);
    while (true) {
      c.vertices.push_back(cur);
      covered.insert(cur);
      if (branch_index[cur] != -1 && (cur != start || c.vertices.size() > 1)) break;
      Vertex nxt = -1;
      g.neighbors(cur).for_each([&](Vertex w) {
        if (w != prev && !used_edge[cur].contains(w)) nxt = w;
      });
      if (nxt == -1) break;
      used_edge[cur].insert(nxt);
      used_edge[nxt].insert(cur);
      prev = cur;
      cur = nxt;
    }
    return c;
  };
  for (int i = 0; i < t.branch_count(); ++i) {
    Vertex b = t.branch[i];
    covered.insert(b);
    for (Vertex w : g.neighbors(b).members()) {
      if (used_edge[b].contains(w)) continue;
      auto c = walk(b, w);
      int ea = branch_index[c.vertices.front()], eb = branch_index[c.vertices.back()];
      if (ea > eb) {
        std::reverse(c.vertices.begin(), c.vertices.end());
        std::swap(ea, eb);
      }
      c.a = ea;
      c.b = eb;
      t.chains.push_back(std::move(c));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (covered.contains(v)) continue;
    // v lies on a cycle component
    int idx = t.branch_count();
    branch_index[v] = idx;
    t.branch.push_back(v);
    t.pseudo.push_back(true);
    t.degree.push_back(2);
    covered.insert(v);
    Vertex first = g.neighbors(v).first();
    auto c = walk(v, first);
    c.a = c.b = idx;
    t.chains.push_back(std::move(c));
  }
  return t;
}

namespace detail {

// Bijections between the branch sets of two reduced multigraphs that keep
// kinds, degrees and chain multiplicities. accept(i, j, lhs, rhs) decides
// whether the chain-length groups of pair (i, j) are compatible.
class BranchMatcher {
 public:
  using GroupMap = std::map<std::pair<int, int>, std::vector<int>>;
  using Compatible = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

  BranchMatcher(const Topology& from, const Topology& to, Compatible compatible)
      : from_(from), to_(to), fg_(from.groups()), tg_(to.groups()), compatible_(std::move(compatible)) {}

  // Calls visit for each consistent bijection; visit returns false to stop.
  void run(const std::function<bool(const std::vector<int>&)>& visit) {
    if (from_.branch_count() != to_.branch_count() || from_.chains.size() != to_.chains.size()) return;
    map_.assign(from_.branch_count(), -1);
    used_.assign(to_.branch_count(), false);
    visit_ = &visit;
    stop_ = false;
    rec(0);
  }

 private:
  const std::vector<int>& group(const GroupMap& g, int i, int j) const {
    static const std::vector<int> empty;
    auto it = g.find({std::min(i, j), std::max(i, j)});
    return it == g.end() ? empty : it->second;
  }

  void rec(int i) {
    if (stop_) return;
    if (i == from_.branch_count()) {
      if (!(*visit_)(map_)) stop_ = true;
      return;
    }
    for (int j = 0; j < to_.branch_count() && !stop_; ++j) {
      if (used_[j] || to_.pseudo[j] != from_.pseudo[i] || to_.degree[j] != from_.degree[i]) continue;
      map_[i] = j;
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k) {
        const auto& lhs = group(fg_, k, i);
        const auto& rhs = group(tg_, map_[k], j);
        if (lhs.size() != rhs.size() || !compatible_(lhs, rhs)) ok = false;
      }
      if (ok) {
        used_[j] = true;
        rec(i + 1);
        used_[j] = false;
      }
      map_[i] = -1;
    }
  }

  const Topology& from_;
  const Topology& to_;
  GroupMap fg_, tg_;
  Compatible compatible_;
  std::vector<int> map_;
  std::vector<bool> used_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  bool stop_ = false;
};

inline bool dominated(const std::vector<int>& lower, const std::vector<int>& upper) {
  for (std::size_t k = 0; k < lower.size(); ++k)
    if (lower[k] > upper[k]) return false;
  return true;
}

}  // namespace detail

struct SubdivisionMatch {
  bool matched = false;
  std::vector<std::pair<Vertex, Vertex>> branch_map;  // (vertex of F, vertex of G)
};

// Whether g is isomorphic to a subdivision of f. Both graphs are reduced to
// their branch multigraphs; g qualifies iff some branch bijection keeps
// degrees and multiplicities and every chain group of f is dominated
// (sorted, elementwise) by the corresponding group of g.
inline SubdivisionMatch is_subdivision_of(const Graph& g, const Graph& f) {
  SubdivisionMatch out;
  if (g.vertex_count() < f.vertex_count() || g.edge_count() - g.vertex_count() != f.edge_count() - f.vertex_count())
    return out;
  Topology tf = topology_of(f), tg = topology_of(g);
  detail::BranchMatcher m(tf, tg, [](const auto& lhs, const auto& rhs) { return detail::dominated(lhs, rhs); });
  m.run([&](const std::vector<int>& map) {
    out.matched = true;
    for (int i = 0; i < tf.branch_count(); ++i) out.branch_map.emplace_back(tf.branch[i], tg.branch[map[i]]);
    return false;
  });
  return out;
}

// Calls emit for each subdivision of f with at most max_vertices vertices,
// exactly once per isomorphism class, in order of increasing size. emit may
// return false to stop early.
inline void enumerate_subdivisions(const Graph& f, int max_vertices, const std::function<bool(const Graph&)>& emit) {
  if (max_vertices < f.vertex_count()) return;
  const Topology top = topology_of(f);
  const int chain_count = static_cast<int>(top.chains.size());

  // Chains ordered by group, base length ascending inside a group.
  std::vector<int> order(chain_count);
  for (int i = 0; i < chain_count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const auto &cx = top.chains[x], &cy = top.chains[y];
    if (cx.a != cy.a) return cx.a < cy.a;
    if (cx.b != cy.b) return cx.b < cy.b;
    return cx.length() < cy.length();
  });
  std::vector<int> base(chain_count), group_start(chain_count);
  for (int k = 0; k < chain_count; ++k) {
    base[k] = top.chains[order[k]].length();
    const auto& c = top.chains[order[k]];
    group_start[k] = (k > 0 && top.chains[order[k - 1]].a == c.a && top.chains[order[k - 1]].b == c.b) ? group_start[k - 1] : k;
  }
  std::map<std::pair<int, int>, std::vector<int>> base_groups = top.groups();

  // Vertex automorphisms of the reduced multigraph (lengths ignored).
  std::vector<std::vector<int>> autos;
  detail::BranchMatcher matcher(top, top, [](const auto&, const auto&) { return true; });
  matcher.run([&](const std::vector<int>& m) {
    autos.push_back(m);
    return true;
  });

  auto canonical = [&](const std::vector<int>& len) {
    // group lengths of the candidate
    std::map<std::pair<int, int>, std::vector<int>> cur;
    for (int k = 0; k < chain_count; ++k) {
      const auto& c = top.chains[order[k]];
      cur[{c.a, c.b}].push_back(len[k]);
    }
    for (const auto& pi : autos) {
      std::map<std::pair<int, int>, std::vector<int>> img;
      for (auto& [key, vals] : cur) {
        int a = pi[key.first], b = pi[key.second];
        auto& dst = img[{std::min(a, b), std::max(a, b)}];
        dst.insert(dst.end(), vals.begin(), vals.end());
      }
      bool valid = true;
      for (auto& [key, vals] : img) {
        std::sort(vals.begin(), vals.end());
        if (!detail::dominated(base_groups[key], vals)) valid = false;
      }
      if (!valid) continue;
      std::vector<int> image;
      for (int k = 0; k < chain_count; ++k) {
        const auto& c = top.chains[order[k]];
        int pos = k - group_start[k];
        image.push_back(img[{c.a, c.b}][pos]);
      }
      if (image < len) return false;
    }
    return true;
  };

  auto build = [&](const std::vector<int>& len) {
    // all extra vertices of a chain go on its first edge
    auto es = f.edges();
    std::vector<int> extra(es.size(), 0);
    for (int k = 0; k < chain_count; ++k) {
      const auto& c = top.chains[order[k]];
      Vertex u = c.vertices[0], v = c.vertices[1];
      auto key = std::minmax(u, v);
      auto it = std::lower_bound(es.begin(), es.end(), Edge{key.first, key.second});
      extra[it - es.begin()] += len[k] - base[k];
    }
    return subdivide(f, extra);
  };

  const int max_extra = max_vertices - f.vertex_count();
  std::vector<int> len(chain_count);
  bool stop = false;
  std::function<void(int, int)> rec = [&](int k, int remaining) {
    if (stop) return;
    if (k == chain_count) {
      if (remaining == 0 && canonical(len)) {
        if (!emit(build(len))) stop = true;
      }
      return;
    }
    int lo = base[k];
    if (k > group_start[k]) lo = std::max(lo, len[k - 1]);
    for (int l = lo; l - base[k] <= remaining && !stop; ++l) {
      len[k] = l;
      rec(k + 1, remaining - (l - base[k]));
    }
  };
  for (int extra = 0; extra <= max_extra && !stop; ++extra) rec(0, extra);
}

inline std::vector<Graph> subdivisions_up_to(const Graph& f, int max_vertices) {
  std::vector<Graph> out;
  enumerate_subdivisions(f, max_vertices, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace tassel
