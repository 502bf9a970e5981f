#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tassel/check.hpp"
#include "tassel/flow.hpp"
#include "tassel/graph.hpp"

namespace tassel {

using VertexPair = std::pair<Vertex, Vertex>;  // stored with first < second
using Sequence = std::vector<Vertex>;

inline VertexPair make_pair_key(Vertex x, Vertex y) { return {std::min(x, y), std::max(x, y)}; }

namespace detail {

inline std::string vname(Vertex v) { return std::to_string(v); }

inline std::string seq_name(const Sequence& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

inline bool in_range(const Graph& g, const Sequence& s) {
  return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v >= 0 && v < g.vertex_count(); });
}

inline VertexSet set_of(const Graph& g, const Sequence& s) { return VertexSet::of(g.vertex_count(), s); }

}  // namespace detail

// ---- blocks ----

inline bool is_k_block(const Graph& g, const std::vector<Vertex>& b, int k) {
  if (b.size() < 2) throw std::invalid_argument("a block needs at least two vertices");
  for (Vertex v : b) require_vertex(g, v);
  if (static_cast<int>(b.size()) < k) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (b[i] == b[j]) throw std::invalid_argument("block lists vertex " + std::to_string(b[i]) + " twice");
      if (disjoint_paths_count(g, b[i], b[j]) < k) return false;
    }
  return true;
}

struct BlockCertificate {
  std::vector<Vertex> block;
  std::map<VertexPair, std::vector<Sequence>> systems;
};

// Paths in a certificate are vertex sequences with consecutive vertices
// adjacent; chords are allowed. A path may be listed from either end.
inline Check verify_block_certificate(const Graph& g, const BlockCertificate& cert, int k,
                                      std::optional<int> d = std::nullopt, bool strong = false) {
  const auto& b = cert.block;
  if (b.size() < 2) return Check::fail("malformed: block has fewer than two vertices");
  VertexSet bs(g.vertex_count());
  for (Vertex v : b) {
    if (v < 0 || v >= g.vertex_count()) return Check::fail("malformed: block vertex " + detail::vname(v) + " out of range");
    if (bs.contains(v)) return Check::fail("malformed: block vertex " + detail::vname(v) + " repeated");
    bs.insert(v);
  }
  if (static_cast<int>(b.size()) < k) return Check::fail("size: block has fewer than k vertices");
  std::map<VertexPair, VertexSet> interiors, wholes;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      VertexPair key = make_pair_key(b[i], b[j]);
      std::string pname = "{" + detail::vname(key.first) + "," + detail::vname(key.second) + "}";
      auto it = cert.systems.find(key);
      if (it == cert.systems.end()) return Check::fail("malformed: no path system for pair " + pname);
      const auto& paths = it->second;
      if (static_cast<int>(paths.size()) < k)
        return Check::fail("count: pair " + pname + " has " + std::to_string(paths.size()) + " paths, fewer than k");
      VertexSet interior(g.vertex_count()), whole(g.vertex_count());
      std::vector<Sequence> seen;
      for (const auto& raw : paths) {
        if (!detail::in_range(g, raw)) return Check::fail("malformed: path " + detail::seq_name(raw) + " leaves the graph");
        Sequence p = raw;
        if (!p.empty() && p.front() == key.second) std::reverse(p.begin(), p.end());
        if (p.size() < 2 || p.front() != key.first || p.back() != key.second)
          return Check::fail("malformed: path " + detail::seq_name(raw) + " does not join " + pname);
        if (!is_simple_path(g, p)) return Check::fail("path: " + detail::seq_name(raw) + " is not a path in the graph");
        if (std::find(seen.begin(), seen.end(), p) != seen.end())
          return Check::fail("disjointness: path " + detail::seq_name(raw) + " listed twice for " + pname);
        seen.push_back(p);
        for (std::size_t t = 1; t + 1 < p.size(); ++t) {
          if (interior.contains(p[t]))
            return Check::fail("disjointness: paths for " + pname + " share interior vertex " + detail::vname(p[t]));
          interior.insert(p[t]);
        }
        for (Vertex v : p) whole.insert(v);
        if (d && static_cast<int>(p.size()) - 1 > *d)
          return Check::fail("short: path " + detail::seq_name(raw) + " for " + pname + " has length " +
                             std::to_string(p.size() - 1) + " > d");
      }
      interiors[key] = interior;
      wholes[key] = whole;
    }
  if (strong) {
    for (const auto& [p, inner] : interiors)
      for (const auto& [q, all] : wholes) {
        if (p == q) continue;
        VertexSet clash = inner & all;
        if (!clash.empty())
          return Check::fail("strong: interior vertex " + detail::vname(clash.first()) + " of pair {" +
                             detail::vname(p.first) + "," + detail::vname(p.second) + "} lies on a path of pair {" +
                             detail::vname(q.first) + "," + detail::vname(q.second) + "}");
      }
  }
  return Check::pass();
}

// Certificate built from the Menger path families of every pair.
inline BlockCertificate menger_certificate(const Graph& g, const std::vector<Vertex>& b) {
  BlockCertificate cert;
  cert.block = b;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      VertexPair key = make_pair_key(b[i], b[j]);
      cert.systems[key] = disjoint_paths(g, key.first, key.second);
    }
  return cert;
}

// ---- polypaths ----

// Pairwise disjoint induced paths, each listed in path order.
inline Check is_polypath(const Graph& g, const std::vector<Sequence>& w) {
  VertexSet used(g.vertex_count());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& p = w[i];
    if (!detail::in_range(g, p)) return Check::fail("path " + std::to_string(i) + " leaves the graph");
    if (!is_induced_path(g, p)) return Check::fail("path " + std::to_string(i) + " is not an induced path");
    for (Vertex v : p) {
      if (used.contains(v)) return Check::fail("paths overlap at vertex " + detail::vname(v));
      used.insert(v);
    }
  }
  return Check::pass();
}

inline void require_polypath(const Graph& g, const std::vector<Sequence>& w) {
  if (auto c = is_polypath(g, w); !c) throw std::invalid_argument("not a polypath: " + c.violation);
}

// Every vertex of every path has neighbours in fewer than d of the other paths.
inline bool is_d_loose(const Graph& g, const std::vector<Sequence>& w, int d) {
  require_polypath(g, w);
  std::vector<VertexSet> sets;
  for (const auto& p : w) sets.push_back(detail::set_of(g, p));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (Vertex v : w[i]) {
      int touched = 0;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i && g.neighbors(v).intersects(sets[j])) ++touched;
      if (touched >= d) return false;
    }
  return true;
}

struct FancyResult {
  bool supported = true;
  std::vector<std::vector<int>> subsets;  // indices into the polypath, ascending
};

inline constexpr int kFancyMaxSubset = 3;
inline constexpr int kFancyMaxPaths = 16;

// All subsets W' of size w_prime such that each member of W' has an edge to
// every path outside W'. Sizes above the caps are reported as unsupported.
inline FancyResult fancy_subsets(const Graph& g, const std::vector<Sequence>& w, int w_prime) {
  require_polypath(g, w);
  if (w_prime < 1) throw std::invalid_argument("fancy subset size must be positive");
  FancyResult r;
  if (w_prime > kFancyMaxSubset || static_cast<int>(w.size()) > kFancyMaxPaths) {
    r.supported = false;
    return r;
  }
  const int m = static_cast<int>(w.size());
  if (w_prime > m) return r;
  std::vector<VertexSet> sets, reach;
  for (const auto& p : w) {
    sets.push_back(detail::set_of(g, p));
    reach.push_back(neighborhood_of_set(g, sets.back()));
  }
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == w_prime) {
      for (int a : pick)
        for (int o = 0; o < m; ++o)
          if (std::find(pick.begin(), pick.end(), o) == pick.end() && !reach[a].intersects(sets[o])) return;
      r.subsets.push_back(pick);
      return;
    }
    for (int i = from; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return r;
}

// ---- clusters ----

// (S, L) with every vertex of S adjacent to every path of L. L must be a
// polypath disjoint from S; overlap is an error.
inline Check is_cluster(const Graph& g, const std::vector<Vertex>& s, const std::vector<Sequence>& l) {
  VertexSet sset(g.vertex_count());
  for (Vertex x : s) {
    require_vertex(g, x);
    if (sset.contains(x)) return Check::fail("apex " + detail::vname(x) + " listed twice");
    sset.insert(x);
  }
  for (const auto& p : l)
    for (Vertex v : p)
      if (v >= 0 && v < g.vertex_count() && sset.contains(v))
        throw std::invalid_argument("vertex " + detail::vname(v) + " is both an apex and a path vertex");
  if (auto c = is_polypath(g, l); !c) return c;
  for (std::size_t i = 0; i < l.size(); ++i) {
    VertexSet ps = detail::set_of(g, l[i]);
    for (Vertex x : s)
      if (!g.neighbors(x).intersects(ps))
        return Check::fail("apex " + detail::vname(x) + " has no neighbour in path " + std::to_string(i));
  }
  return Check::pass();
}

// Every path vertex has fewer than d neighbours in S.
inline Check is_d_meager(const Graph& g, const std::vector<Vertex>& s, const std::vector<Sequence>& l, int d) {
  VertexSet sset = VertexSet::of(g.vertex_count(), s);
  for (const auto& p : l)
    for (Vertex v : p) {
      if (sset.contains(v)) throw std::invalid_argument("vertex " + detail::vname(v) + " is both an apex and a path vertex");
      int k = (g.neighbors(v) & sset).size();
      if (k >= d)
        return Check::fail("path vertex " + detail::vname(v) + " has " + std::to_string(k) + " neighbours in S, not fewer than " +
                           std::to_string(d));
    }
  return Check::pass();
}

// ---- complete bipartite minor models ----

struct BicliqueMinor {
  std::vector<std::vector<Vertex>> left, right;  // branch sets
};

inline Check check_biclique_minor(const Graph& g, const BicliqueMinor& m) {
  VertexSet used(g.vertex_count());
  std::vector<VertexSet> sets[2];
  for (int side = 0; side < 2; ++side)
    for (const auto& b : side == 0 ? m.left : m.right) {
      if (b.empty()) return Check::fail("empty branch set");
      if (!detail::in_range(g, b)) return Check::fail("branch set leaves the graph");
      VertexSet s = detail::set_of(g, b);
      if (s.intersects(used)) return Check::fail("branch sets overlap");
      used |= s;
      if (components(g, s).size() != 1) return Check::fail("branch set " + detail::seq_name(b) + " is not connected");
      sets[side].push_back(s);
    }
  for (std::size_t i = 0; i < sets[0].size(); ++i)
    for (std::size_t j = 0; j < sets[1].size(); ++j)
      if (!neighborhood_of_set(g, sets[0][i]).intersects(sets[1][j]))
        return Check::fail("branch sets " + std::to_string(i) + " and " + std::to_string(j) + " are not joined");
  return Check::pass();
}

// K_{|S|,|L|} model: apexes as singletons, paths as branch sets.
inline BicliqueMinor cluster_minor(const std::vector<Vertex>& s, const std::vector<Sequence>& l) {
  BicliqueMinor m;
  for (Vertex x : s) m.left.push_back({x});
  for (const auto& p : l) m.right.push_back(p);
  return m;
}

// K_{w', w - w'} model of a fancy polypath: subset paths against the rest.
inline BicliqueMinor fancy_minor(const std::vector<Sequence>& w, const std::vector<int>& subset) {
  BicliqueMinor m;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (std::find(subset.begin(), subset.end(), i) != subset.end())
      m.left.push_back(w[i]);
    else
      m.right.push_back(w[i]);
  }
  return m;
}

// ---- webs ----

struct WebCertificate {
  std::vector<Vertex> web;
  std::map<VertexPair, Sequence> paths;
};

struct WebCheck {
  bool ok = true;
  std::string clause;  // "W1", "W2" or "W3"
  std::string message;
  explicit operator bool() const { return ok; }
};

// Literal check of (W1)-(W3). Each Lambda path must be an induced path with
// the pair as its ends.
inline WebCheck verify_web(const Graph& g, const WebCertificate& cert, std::optional<int> w = std::nullopt) {
  auto fail = [](std::string clause, std::string msg) { return WebCheck{false, std::move(clause), std::move(msg)}; };
  const auto& ws = cert.web;
  VertexSet wset(g.vertex_count());
  for (Vertex v : ws) {
    if (v < 0 || v >= g.vertex_count()) return fail("W1", "vertex " + detail::vname(v) + " out of range");
    if (wset.contains(v)) return fail("W1", "vertex " + detail::vname(v) + " repeated");
    wset.insert(v);
  }
  if (w && static_cast<int>(ws.size()) != *w) return fail("W1", "web has " + std::to_string(ws.size()) + " vertices");
  std::vector<std::pair<VertexPair, VertexSet>> sets;
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      VertexPair key = make_pair_key(ws[i], ws[j]);
      std::string pname = "{" + detail::vname(key.first) + "," + detail::vname(key.second) + "}";
      auto it = cert.paths.find(key);
      if (it == cert.paths.end()) return fail("W2", "no path for pair " + pname);
      const auto& p = it->second;
      if (!detail::in_range(g, p) || p.size() < 2) return fail("W2", "path for " + pname + " is malformed");
      bool ends = (p.front() == key.first && p.back() == key.second) || (p.front() == key.second && p.back() == key.first);
      if (!ends) return fail("W2", "path for " + pname + " has the wrong ends");
      if (!is_induced_path(g, p)) return fail("W2", "path for " + pname + " is not an induced path");
      sets.emplace_back(key, detail::set_of(g, p));
    }
  if (cert.paths.size() != sets.size()) return fail("W2", "paths given for pairs outside the web");
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const auto& [p, ps] = sets[a];
      const auto& [q, qs] = sets[b];
      VertexSet expect(g.vertex_count());
      for (Vertex x : {p.first, p.second})
        if (x == q.first || x == q.second) expect.insert(x);
      VertexSet meet = ps & qs;
      if (!(meet == expect)) {
        Vertex bad = (meet - expect).first();
        return fail("W3", "paths for {" + detail::vname(p.first) + "," + detail::vname(p.second) + "} and {" +
                              detail::vname(q.first) + "," + detail::vname(q.second) + "} meet at vertex " +
                              detail::vname(bad));
      }
    }
  return {};
}

// Shortcut a path (consecutive vertices adjacent) to an induced path on a
// subset of its vertices with the same ends, jumping to the last neighbour.
inline Sequence shortcut_path(const Graph& g, const Sequence& p) {
  Sequence out;
  std::size_t i = 0;
  while (true) {
    out.push_back(p[i]);
    if (i + 1 == p.size()) break;
    std::size_t next = i + 1;
    for (std::size_t j = p.size() - 1; j > i; --j)
      if (g.adjacent(p[i], p[j])) {
        next = j;
        break;
      }
    i = next;
  }
  return out;
}

// One path per pair of a (strong) block certificate, shortcut to an induced
// path. For a strong certificate the result satisfies (W3).
inline WebCertificate web_from_block_certificate(const Graph& g, const BlockCertificate& cert) {
  WebCertificate web;
  web.web = cert.block;
  for (const auto& [key, paths] : cert.systems)
    if (!paths.empty()) {
      Sequence p = paths.front();
      if (p.front() != key.first) std::reverse(p.begin(), p.end());
      web.paths[key] = shortcut_path(g, p);
    }
  return web;
}

}  // namespace tassel
