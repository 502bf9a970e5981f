#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tassel/graph.hpp"
#include "tassel/induced.hpp"
#include "tassel/topology.hpp"

namespace tassel {

inline Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

// Side A is 0..a-1, side B is a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs both sides >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph::from_edges(a + b, es);
}

inline Graph path_graph(int n) {
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, es);
}

// The t-by-t hexagonal wall. Start from the t x 2t grid (row-major ids),
// keep the vertical rung between rows i and i+1 at column j iff i + j is
// even, then strip vertices of degree at most one until none remain.
// wall(1) is a single edge: the one-row grid has no rungs and stripping
// would erase it.
inline Graph wall(int t) {
  if (t < 1) throw std::invalid_argument("wall order must be >= 1");
  if (t == 1) return complete(2);
  const int cols = 2 * t;
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<Edge> es;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j + 1 < cols; ++j) es.emplace_back(id(i, j), id(i, j + 1));
  for (int i = 0; i + 1 < t; ++i)
    for (int j = 0; j < cols; ++j)
      if ((i + j) % 2 == 0) es.emplace_back(id(i, j), id(i + 1, j));
  Graph g = Graph::from_edges(t * cols, es);
  VertexSet keep = g.all();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : keep.members())
      if ((g.neighbors(v) & keep).size() <= 1) {
        keep.erase(v);
        changed = true;
      }
  }
  return induced_subgraph(g, keep).graph;
}

enum class ObstructionKind { complete, complete_bipartite, wall_subdivision, line_of_wall_subdivision };

inline std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::complete: return "complete";
    case ObstructionKind::complete_bipartite: return "complete-bipartite";
    case ObstructionKind::wall_subdivision: return "wall-subdivision";
    case ObstructionKind::line_of_wall_subdivision: return "line-of-wall-subdivision";
  }
  return "?";
}

inline std::optional<ObstructionKind> obstruction_kind_from_string(const std::string& s) {
  for (auto k : {ObstructionKind::complete, ObstructionKind::complete_bipartite, ObstructionKind::wall_subdivision,
                 ObstructionKind::line_of_wall_subdivision})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

// All graphs H (up to the choice of clique partition) with L(H) = g, via
// Krausz partitions: the edges of g split into cliques so that every vertex
// lies in at most two of them. Vertices in a single clique get a pendant
// vertex in H. Isolated vertices of g become isolated edges. Stops after
// `cap` roots.
inline std::vector<Graph> line_graph_roots(const Graph& g, std::size_t cap = 64) {
  const int n = g.vertex_count();
  const auto es = g.edges();
  const int m = static_cast<int>(es.size());
  std::vector<std::vector<int>> edge_id(n, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) edge_id[es[i].first][es[i].second] = edge_id[es[i].second][es[i].first] = i;

  std::vector<Graph> roots;
  std::vector<VertexSet> cliques;
  std::vector<std::vector<int>> member_of(n);
  std::vector<int> assigned(m, -1);

  auto emit = [&] {
    // H vertices: cliques, then pendants
    std::vector<Edge> h_edges;
    int next = static_cast<int>(cliques.size());
    for (Vertex v = 0; v < n; ++v) {
      const auto& mo = member_of[v];
      if (mo.size() == 2) {
        h_edges.emplace_back(mo[0], mo[1]);
      } else if (mo.size() == 1) {
        h_edges.emplace_back(mo[0], next++);
      } else {
        h_edges.emplace_back(next, next + 1);
        next += 2;
      }
    }
    roots.push_back(Graph::from_edges(next, h_edges));
  };

  std::function<void(int)> rec = [&](int k) {
    if (roots.size() >= cap) return;
    while (k < m && assigned[k] != -1) ++k;
    if (k == m) {
      emit();
      return;
    }
    auto [u, v] = es[k];
    // grow an existing clique of one endpoint by the other endpoint
    for (int side = 0; side < 2; ++side) {
      Vertex in = side == 0 ? u : v, out = side == 0 ? v : u;
      if (member_of[out].size() >= 2) continue;
      for (int c : member_of[in]) {
        if (cliques[c].contains(out)) continue;
        bool ok = true;
        std::vector<int> grabbed;
        cliques[c].for_each([&](Vertex w) {
          if (!ok) return;
          int e = g.adjacent(out, w) ? edge_id[out][w] : -1;
          if (e == -1 || assigned[e] != -1) ok = false;
          else grabbed.push_back(e);
        });
        if (!ok) continue;
        for (int e : grabbed) assigned[e] = c;
        cliques[c].insert(out);
        member_of[out].push_back(c);
        rec(k + 1);
        member_of[out].pop_back();
        cliques[c].erase(out);
        for (int e : grabbed) assigned[e] = -1;
      }
    }
    if (member_of[u].size() < 2 && member_of[v].size() < 2) {
      int c = static_cast<int>(cliques.size());
      cliques.push_back(VertexSet(n, {u, v}));
      member_of[u].push_back(c);
      member_of[v].push_back(c);
      assigned[k] = c;
      rec(k + 1);
      assigned[k] = -1;
      member_of[v].pop_back();
      member_of[u].pop_back();
      cliques.pop_back();
    }
  };
  rec(0);
  return roots;
}

inline bool is_line_of_wall_subdivision(const Graph& g, int t) {
  const Graph w = wall(t);
  if (g.vertex_count() < w.edge_count()) return false;
  if (g.max_degree() > 4) return false;
  for (const Graph& h : line_graph_roots(g))
    if (is_subdivision_of(h, w).matched) return true;
  return false;
}

inline std::optional<ObstructionKind> is_t_basic(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (is_isomorphic(g, complete(t + 1))) return ObstructionKind::complete;
  if (is_isomorphic(g, complete_bipartite(t, t))) return ObstructionKind::complete_bipartite;
  if (is_subdivision_of(g, wall(t)).matched) return ObstructionKind::wall_subdivision;
  if (is_line_of_wall_subdivision(g, t)) return ObstructionKind::line_of_wall_subdivision;
  return std::nullopt;
}

// A multigraph whose edges are either rigid (a single edge) or flexible (a
// path with at least min_len edges). Its realizations are the graphs obtained
// by choosing a length for every flexible edge.
struct FlexPattern {
  struct Link {
    int a = 0, b = 0;
    int min_len = 1;
    bool rigid = false;
  };
  int core = 0;
  std::vector<Link> links;

  int min_vertices() const {
    int total = core;
    for (const auto& l : links)
      if (!l.rigid) total += l.min_len - 1;
    return total;
  }
  std::vector<int> degrees() const {
    std::vector<int> d(core, 0);
    for (const auto& l : links) {
      ++d[l.a];
      ++d[l.b];
    }
    return d;
  }
};

// Subdivisions of f: one core vertex per branch vertex, one flexible link per
// chain with the chain's length as minimum.
inline FlexPattern subdivision_pattern(const Graph& f) {
  Topology top = topology_of(f);
  FlexPattern p;
  p.core = top.branch_count();
  for (const auto& c : top.chains) p.links.push_back({c.a, c.b, c.length(), false});
  return p;
}

// Line graphs of subdivisions of f. Every branch vertex b of degree d turns
// into a clique of d slots, one per chain end. A chain of base length l >= 2
// becomes a flexible link of minimum l - 1 between its two slots. A chain of
// base length one is either kept at length one in the subdivision (its two
// slots merge) or lengthened (a flexible link of minimum 1); `merge_mask`
// picks, bit k for the k-th such chain.
inline FlexPattern line_subdivision_pattern(const Graph& f, unsigned long long merge_mask) {
  Topology top = topology_of(f);
  std::vector<int> slot_of_end;  // 2 * chain + end
  std::vector<int> owner;        // slot -> branch
  for (std::size_t c = 0; c < top.chains.size(); ++c) {
    const auto& ch = top.chains[c];
    for (int end = 0; end < 2; ++end) {
      slot_of_end.push_back(static_cast<int>(owner.size()));
      owner.push_back(end == 0 ? ch.a : ch.b);
    }
  }
  const int slots = static_cast<int>(owner.size());
  std::vector<int> parent(slots);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  std::vector<FlexPattern::Link> flex;
  int unit_index = 0;
  for (std::size_t c = 0; c < top.chains.size(); ++c) {
    const auto& ch = top.chains[c];
    int s0 = slot_of_end[2 * c], s1 = slot_of_end[2 * c + 1];
    if (top.pseudo[ch.a]) {
      // a cycle component is its own line graph
      flex.push_back({s0, s0, ch.length(), false});
      parent[s1] = s0;
      continue;
    }
    if (ch.length() >= 2) {
      flex.push_back({s0, s1, ch.length() - 1, false});
    } else if ((merge_mask >> unit_index++) & 1ULL) {
      parent[find(s1)] = find(s0);
    } else {
      flex.push_back({s0, s1, 1, false});
    }
  }
  std::vector<int> core_id(slots, -1);
  FlexPattern p;
  for (int s = 0; s < slots; ++s)
    if (find(s) == s) core_id[s] = p.core++;
  auto cid = [&](int s) { return core_id[find(s)]; };
  for (const auto& l : flex) p.links.push_back({cid(l.a), cid(l.b), l.min_len, false});
  for (int s = 0; s < slots; ++s)
    for (int r = s + 1; r < slots; ++r)
      if (owner[s] == owner[r] && !top.pseudo[owner[s]] && cid(s) != cid(r))
        p.links.push_back({cid(s), cid(r), 1, true});
  return p;
}

inline int unit_chain_count(const Graph& f) {
  int k = 0;
  Topology top = topology_of(f);
  for (const auto& c : top.chains)
    if (!top.pseudo[c.a] && c.length() == 1) ++k;
  return k;
}

struct FlexMatch {
  SearchStatus status = SearchStatus::none;
  std::vector<Vertex> vertices;  // host vertices of the realization, ascending
};

namespace detail {

// Backtracking search for an induced realization of a FlexPattern. Every host
// vertex added to the partial image U must see exactly its planned
// neighbours inside U, so a completed U induces a realization.
class FlexSearch {
 public:
  FlexSearch(const FlexPattern& p, const Graph& g, NodeBudget& budget)
      : p_(p), g_(g), budget_(budget), deg_(p.degrees()), img_(p.core, -1), done_(p.links.size(), false),
        used_(g.vertex_count()) {
    plan();
  }

  FlexMatch run() {
    FlexMatch out;
    if (p_.min_vertices() > g_.vertex_count()) return out;
    found_ = false;
    step(0);
    if (found_) {
      out.status = SearchStatus::found;
      out.vertices = result_;
    } else {
      out.status = budget_.exhausted() ? SearchStatus::exhausted : SearchStatus::none;
    }
    return out;
  }

 private:
  struct Step {
    bool root = false;
    int vertex = -1;  // root vertex
    int link = -1;
    int from = -1, to = -1;
    bool places = false;
    int min_new = 0;  // lower bound on host vertices this step adds
  };

  void plan() {
    std::vector<bool> placed(p_.core, false), processed(p_.links.size(), false);
    int placed_count = 0;
    auto place = [&](int v) {
      placed[v] = true;
      ++placed_count;
      for (std::size_t e = 0; e < p_.links.size(); ++e) {
        const auto& l = p_.links[e];
        if (l.rigid && !processed[e] && placed[l.a] && placed[l.b]) processed[e] = true;
      }
    };
    while (true) {
      int pick = -1;
      for (std::size_t e = 0; e < p_.links.size() && pick == -1; ++e)
        if (!processed[e] && placed[p_.links[e].a] && placed[p_.links[e].b]) pick = static_cast<int>(e);
      if (pick != -1) {
        const auto& l = p_.links[pick];
        steps_.push_back({false, -1, pick, l.a, l.b, false, l.min_len - 1});
        processed[pick] = true;
        continue;
      }
      for (int pass = 0; pass < 2 && pick == -1; ++pass)
        for (std::size_t e = 0; e < p_.links.size() && pick == -1; ++e) {
          const auto& l = p_.links[e];
          if (processed[e] || placed[l.a] == placed[l.b]) continue;
          if (pass == 0 && !l.rigid) continue;
          pick = static_cast<int>(e);
        }
      if (pick != -1) {
        const auto& l = p_.links[pick];
        int from = placed[l.a] ? l.a : l.b, to = placed[l.a] ? l.b : l.a;
        steps_.push_back({false, -1, pick, from, to, true, l.rigid ? 1 : l.min_len});
        processed[pick] = true;
        place(to);
        continue;
      }
      if (placed_count == p_.core) break;
      int best = -1;
      for (int v = 0; v < p_.core; ++v)
        if (!placed[v] && (best == -1 || deg_[v] > deg_[best])) best = v;
      steps_.push_back({true, best, -1, -1, -1, true, 1});
      place(best);
    }
    suffix_.assign(steps_.size() + 1, 0);
    for (int i = static_cast<int>(steps_.size()) - 1; i >= 0; --i) suffix_[i] = suffix_[i + 1] + steps_[i].min_new;
  }

  // Tries w as the image of core vertex b with path predecessor prev (or -1),
  // excluding link `via` from the bookkeeping. Calls next() on success.
  bool place(int b, Vertex w, Vertex prev, int via, const std::function<void()>& next) {
    if (used_.contains(w) || g_.degree(w) < deg_[b]) return false;
    VertexSet nb = g_.neighbors(w) & used_;
    VertexSet claimed(g_.vertex_count());
    if (prev != -1) {
      if (!nb.contains(prev)) return false;
      claimed.insert(prev);
    }
    std::vector<int> newly_done;
    for (std::size_t e = 0; e < p_.links.size(); ++e) {
      const auto& l = p_.links[e];
      if (done_[e] || static_cast<int>(e) == via || l.a == l.b) continue;
      int other = l.a == b ? l.b : (l.b == b ? l.a : -1);
      if (other == -1 || img_[other] == -1) continue;
      Vertex o = img_[other];
      if (l.rigid) {
        if (!nb.contains(o) || claimed.contains(o)) return false;
        claimed.insert(o);
        newly_done.push_back(static_cast<int>(e));
      } else if (l.min_len == 1 && nb.contains(o) && !claimed.contains(o)) {
        claimed.insert(o);
        newly_done.push_back(static_cast<int>(e));
      }
    }
    if (!(nb == claimed)) return false;
    for (int e : newly_done) done_[e] = true;
    img_[b] = w;
    used_.insert(w);
    next();
    used_.erase(w);
    img_[b] = -1;
    for (int e : newly_done) done_[e] = false;
    return true;
  }

  bool halted() const { return found_ || budget_.exhausted(); }

  void step(std::size_t i) {
    if (halted()) return;
    if (i == steps_.size()) {
      found_ = true;
      result_ = used_.members();
      return;
    }
    if (used_.size() + suffix_[i] > g_.vertex_count()) return;
    const Step& s = steps_[i];
    if (s.root) {
      for (Vertex w = 0; w < g_.vertex_count() && !halted(); ++w) {
        if (used_.contains(w)) continue;
        if (!budget_.spend()) return;
        place(s.vertex, w, -1, -1, [&] { step(i + 1); });
      }
      return;
    }
    const auto& l = p_.links[s.link];
    if (done_[s.link]) {
      step(i + 1);
      return;
    }
    done_[s.link] = true;
    if (l.rigid) {
      Vertex a = img_[s.from];
      for (Vertex w : (g_.neighbors(a) - used_).members()) {
        if (halted() || !budget_.spend()) break;
        place(s.to, w, a, s.link, [&] { step(i + 1); });
      }
    } else {
      route(i, img_[s.from], 0);
    }
    done_[s.link] = false;
  }

  // Extends the path of step i past prev, which is `edges` edges from the
  // start of the link.
  void route(std::size_t i, Vertex prev, int edges) {
    const Step& s = steps_[i];
    const auto& l = p_.links[s.link];
    const Vertex target = s.places ? -1 : img_[s.to];
    for (Vertex w : (g_.neighbors(prev) - used_).members()) {
      if (halted() || !budget_.spend()) return;
      const int len = edges + 1;
      if (s.places && len >= l.min_len) place(s.to, w, prev, s.link, [&] { step(i + 1); });
      if (halted()) return;
      VertexSet nb = g_.neighbors(w) & used_;
      const int nbs = nb.size();
      if (nbs == 1 && g_.degree(w) >= 2) {
        // interior vertex; when target == prev (first vertex of a loop) this
        // is the only option
        used_.insert(w);
        if (used_.size() + suffix_[i + 1] + (s.places ? 1 : 0) <= g_.vertex_count()) route(i, w, len);
        used_.erase(w);
      } else if (!s.places && nbs == 2 && prev != target && nb.contains(target) && len + 1 >= l.min_len) {
        used_.insert(w);
        step(i + 1);
        used_.erase(w);
      }
    }
  }

  const FlexPattern& p_;
  const Graph& g_;
  NodeBudget& budget_;
  std::vector<int> deg_;
  std::vector<Step> steps_;
  std::vector<int> suffix_;
  std::vector<Vertex> img_;
  std::vector<bool> done_;
  VertexSet used_;
  bool found_ = false;
  std::vector<Vertex> result_;
};

}  // namespace detail

inline FlexMatch find_induced_realization(const FlexPattern& p, const Graph& g, NodeBudget& budget) {
  detail::FlexSearch search(p, g, budget);
  return search.run();
}

enum class CleanVerdict { clean, obstruction, inconclusive };

inline std::string to_string(CleanVerdict v) {
  switch (v) {
    case CleanVerdict::clean: return "clean";
    case CleanVerdict::obstruction: return "obstruction";
    case CleanVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct CleanReport {
  CleanVerdict verdict = CleanVerdict::clean;
  ObstructionKind kind = ObstructionKind::complete;
  Graph obstruction;    // the induced obstruction, relabelled 0..k-1
  Embedding embedding;  // obstruction vertex -> host vertex
  long long nodes = 0;
  std::vector<std::string> families_searched;
  std::vector<std::string> families_skipped;  // minimum member larger than the host
};

enum class CleanStrategy { structural, catalog };

namespace detail {

inline void record_obstruction(CleanReport& r, const Graph& g, ObstructionKind kind, const std::vector<Vertex>& host) {
  r.verdict = CleanVerdict::obstruction;
  r.kind = kind;
  auto sub = induced_subgraph(g, std::span<const Vertex>(host));
  r.obstruction = sub.graph;
  r.embedding.mapping = sub.original;
}

}  // namespace detail

// Decides whether g contains an induced t-basic obstruction. Cliques and
// bicliques go first. The wall families are searched either structurally
// (induced realizations of the flexible patterns above, no size limit on the
// subdivision) or through the explicit catalog of subdivisions on at most
// |V(g)| vertices. "clean" is exact unless the budget ran out, in which case
// the verdict is inconclusive.
inline CleanReport t_clean_check(const Graph& g, int t, NodeBudget& budget,
                                 CleanStrategy strategy = CleanStrategy::structural) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  CleanReport r;
  const int n = g.vertex_count();
  bool inconclusive = false;
  auto finish = [&]() -> CleanReport {
    r.nodes = budget.used();
    if (r.verdict != CleanVerdict::obstruction && inconclusive) r.verdict = CleanVerdict::inconclusive;
    return r;
  };
  auto try_pattern = [&](const Graph& pat, ObstructionKind kind) {
    auto res = find_induced(pat, g, budget);
    if (res.status == SearchStatus::found) {
      detail::record_obstruction(r, g, kind, res.embedding.mapping);
      return true;
    }
    if (res.status == SearchStatus::exhausted) inconclusive = true;
    return false;
  };

  Graph kt = complete(t + 1);
  if (kt.vertex_count() <= n) {
    r.families_searched.push_back(to_string(ObstructionKind::complete));
    if (try_pattern(kt, ObstructionKind::complete)) return finish();
  } else {
    r.families_skipped.push_back(to_string(ObstructionKind::complete));
  }
  Graph ktt = complete_bipartite(t, t);
  if (ktt.vertex_count() <= n) {
    r.families_searched.push_back(to_string(ObstructionKind::complete_bipartite));
    if (try_pattern(ktt, ObstructionKind::complete_bipartite)) return finish();
  } else {
    r.families_skipped.push_back(to_string(ObstructionKind::complete_bipartite));
  }

  const Graph w = wall(t);
  if (w.vertex_count() <= n) {
    r.families_searched.push_back(to_string(ObstructionKind::wall_subdivision));
    if (strategy == CleanStrategy::structural) {
      auto res = find_induced_realization(subdivision_pattern(w), g, budget);
      if (res.status == SearchStatus::found) {
        detail::record_obstruction(r, g, ObstructionKind::wall_subdivision, res.vertices);
        return finish();
      }
      if (res.status == SearchStatus::exhausted) inconclusive = true;
    } else {
      bool hit = false;
      enumerate_subdivisions(w, n, [&](const Graph& s) {
        hit = try_pattern(s, ObstructionKind::wall_subdivision);
        return !hit && !budget.exhausted();
      });
      if (hit) return finish();
      if (budget.exhausted()) inconclusive = true;
    }
  } else {
    r.families_skipped.push_back(to_string(ObstructionKind::wall_subdivision));
  }

  if (w.edge_count() <= n) {
    r.families_searched.push_back(to_string(ObstructionKind::line_of_wall_subdivision));
    if (strategy == CleanStrategy::structural) {
      const int units = unit_chain_count(w);
      for (unsigned long long mask = 0; mask < (1ULL << units); ++mask) {
        auto res = find_induced_realization(line_subdivision_pattern(w, mask), g, budget);
        if (res.status == SearchStatus::found) {
          detail::record_obstruction(r, g, ObstructionKind::line_of_wall_subdivision, res.vertices);
          return finish();
        }
        if (res.status == SearchStatus::exhausted) {
          inconclusive = true;
          break;
        }
      }
    } else {
      // L(S) has |E(S)| = |V(S)| + |E(w)| - |V(w)| vertices.
      const int max_sub = n - w.edge_count() + w.vertex_count();
      bool hit = false;
      enumerate_subdivisions(w, max_sub, [&](const Graph& s) {
        hit = try_pattern(line_graph(s), ObstructionKind::line_of_wall_subdivision);
        return !hit && !budget.exhausted();
      });
      if (hit) return finish();
      if (budget.exhausted()) inconclusive = true;
    }
  } else {
    r.families_skipped.push_back(to_string(ObstructionKind::line_of_wall_subdivision));
  }
  return finish();
}

inline CleanReport t_clean_check(const Graph& g, int t, long long budget_limit = -1,
                                 CleanStrategy strategy = CleanStrategy::structural) {
  NodeBudget budget(budget_limit);
  return t_clean_check(g, t, budget, strategy);
}

}  // namespace tassel
