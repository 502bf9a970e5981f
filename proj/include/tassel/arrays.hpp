#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tassel/bits.hpp"
#include "tassel/check.hpp"
#include "tassel/graph.hpp"
#include "tassel/probes.hpp"
#include "tassel/rng.hpp"

namespace tassel {

// ---- strands ----

struct Strand {
  Graph graph;
  Vertex neck = -1;
  Sequence path;
};

// Path on |bits| vertices 0..k-1, neck k adjacent to position i iff bit i is 1.
inline Strand strand_from_pattern(const BitString& bits) {
  require_bits(bits);
  if (!has_one(bits)) throw std::invalid_argument("strand pattern \"" + bits + "\" has no 1");
  const int k = static_cast<int>(bits.size());
  std::vector<Edge> es;
  for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
  for (int i = 0; i < k; ++i)
    if (bits[i] == '1') es.emplace_back(i, k);
  Strand s;
  s.graph = Graph::from_edges(k + 1, es);
  s.neck = k;
  for (int i = 0; i < k; ++i) s.path.push_back(i);
  return s;
}

// Neck adjacency along the path in stored order, not canonicalized.
inline BitString neck_bits(const Graph& g, Vertex neck, const Sequence& path) {
  BitString out;
  for (Vertex v : path) out += g.adjacent(neck, v) ? '1' : '0';
  return out;
}

inline BitString string_of_strand(const Strand& s) { return canonical(neck_bits(s.graph, s.neck, s.path)); }

inline Check check_strand(const Strand& s) {
  const Graph& g = s.graph;
  if (s.neck < 0 || s.neck >= g.vertex_count()) return Check::fail("neck out of range");
  if (s.path.empty()) return Check::fail("path is empty");
  if (!detail::in_range(g, s.path)) return Check::fail("path leaves the graph");
  if (std::find(s.path.begin(), s.path.end(), s.neck) != s.path.end()) return Check::fail("neck lies on the path");
  if (static_cast<int>(s.path.size()) + 1 != g.vertex_count()) return Check::fail("graph has vertices outside neck and path");
  if (!is_induced_path(g, s.path)) return Check::fail("path is not an induced path");
  if (!has_one(neck_bits(g, s.neck, s.path))) return Check::fail("neck has no neighbour on the path");
  return Check::pass();
}

namespace detail {

// The neck avoids the first and last c positions of the path.
inline bool padded_neck(const BitString& bits, int c) {
  return static_cast<int>(bits.size()) >= 2 * c + 1 && is_c_padded(bits, c);
}

}  // namespace detail

inline Check is_c_strand(const Strand& s, int c) {
  if (auto k = check_strand(s); !k) return k;
  if (!detail::padded_neck(neck_bits(s.graph, s.neck, s.path), c))
    return Check::fail("neck is adjacent to one of the first or last " + std::to_string(c) + " path vertices");
  return Check::pass();
}

// ---- tassels ----

struct Tassel {
  Graph graph;
  Vertex neck = -1;
  std::vector<Sequence> paths;
};

// count copies of the strand's path, copy i on ids i*k .. i*k+k-1, glued at
// the neck (id count*k).
inline Tassel build_tassel(const Strand& s, int count) {
  if (count < 1) throw std::invalid_argument("a tassel needs at least one path");
  if (auto k = check_strand(s); !k) throw std::invalid_argument("invalid strand: " + k.violation);
  const BitString bits = neck_bits(s.graph, s.neck, s.path);
  const int k = static_cast<int>(bits.size());
  Tassel t;
  t.neck = count * k;
  std::vector<Edge> es;
  for (int i = 0; i < count; ++i) {
    Sequence p;
    for (int j = 0; j < k; ++j) {
      p.push_back(i * k + j);
      if (j > 0) es.emplace_back(i * k + j - 1, i * k + j);
      if (bits[j] == '1') es.emplace_back(i * k + j, t.neck);
    }
    t.paths.push_back(p);
  }
  t.graph = Graph::from_edges(count * k + 1, es);
  return t;
}

inline Tassel build_tassel(const BitString& bits, int count) { return build_tassel(strand_from_pattern(bits), count); }

// Structure only: disjoint anticomplete induced paths, the neck touching
// each, every path carrying the same neck string up to reversal, and no
// other vertices.
inline Check check_tassel(const Tassel& t) {
  const Graph& g = t.graph;
  if (t.neck < 0 || t.neck >= g.vertex_count()) return Check::fail("neck: out of range");
  if (t.paths.empty()) return Check::fail("paths: none given");
  VertexSet seen(g.vertex_count());
  seen.insert(t.neck);
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    const auto& p = t.paths[i];
    std::string name = "paths[" + std::to_string(i) + "]";
    if (p.empty() || !detail::in_range(g, p)) return Check::fail(name + ": empty or out of range");
    for (Vertex v : p) {
      if (seen.contains(v)) return Check::fail(name + ": vertex " + std::to_string(v) + " already used");
      seen.insert(v);
    }
    if (!is_induced_path(g, p)) return Check::fail(name + ": not an induced path");
    sets.push_back(detail::set_of(g, p));
  }
  if (seen.size() != g.vertex_count()) return Check::fail("graph: vertices outside neck and paths");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!are_anticomplete(g, sets[i], sets[j]))
        return Check::fail("paths[" + std::to_string(i) + "] and paths[" + std::to_string(j) + "]: not anticomplete");
  const BitString first = canonical(neck_bits(g, t.neck, t.paths[0]));
  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    BitString b = neck_bits(g, t.neck, t.paths[i]);
    if (!has_one(b)) return Check::fail("paths[" + std::to_string(i) + "]: neck has no neighbour");
    if (canonical(b) != first) return Check::fail("paths[" + std::to_string(i) + "]: strand differs from paths[0]");
  }
  return Check::pass();
}

inline Check is_c_tassel(const Tassel& t, int c) {
  if (auto k = check_tassel(t); !k) return k;
  if (static_cast<int>(t.paths.size()) < c)
    return Check::fail("paths: " + std::to_string(t.paths.size()) + " paths, fewer than " + std::to_string(c));
  if (!detail::padded_neck(neck_bits(t.graph, t.neck, t.paths[0]), c))
    return Check::fail("neck: adjacent to one of the first or last " + std::to_string(c) + " path vertices");
  return Check::pass();
}

// ---- hassles ----

struct Hassle {
  Graph graph;
  Vertex neck = -1;
  std::vector<Sequence> walks;  // phi_W as the sequence of images
};

inline Hassle tassel_as_hassle(const Tassel& t) { return {t.graph, t.neck, t.paths}; }

// Every window of at most c consecutive positions maps onto a set inducing
// a path.
inline bool is_c_stretched(const Graph& g, const Sequence& walk, int c) {
  const int n = static_cast<int>(walk.size());
  const int len = std::min(c, n);
  for (int start = 0; start + len <= n; ++start) {
    VertexSet s(g.vertex_count());
    for (int i = start; i < start + len; ++i) s.insert(walk[i]);
    if (!is_path(induced_subgraph(g, s).graph)) return false;
  }
  return true;
}

inline Check is_c_hassle(const Hassle& h, int c) {
  const Graph& g = h.graph;
  if (h.neck < 0 || h.neck >= g.vertex_count()) return Check::fail("neck: out of range");
  if (static_cast<int>(h.walks.size()) < c)
    return Check::fail("walks: " + std::to_string(h.walks.size()) + " walks, fewer than " + std::to_string(c));
  VertexSet used(g.vertex_count());
  used.insert(h.neck);
  for (std::size_t i = 0; i < h.walks.size(); ++i) {
    const auto& w = h.walks[i];
    std::string name = "walks[" + std::to_string(i) + "]";
    if (w.empty() || !detail::in_range(g, w)) return Check::fail(name + ": empty or out of range");
    VertexSet mine = detail::set_of(g, w);
    if (mine.contains(h.neck)) return Check::fail(name + ": contains the neck");
    if (mine.intersects(used)) return Check::fail(name + ": shares a vertex with another walk");
    used |= mine;
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
      if (!g.adjacent(w[j], w[j + 1]))
        return Check::fail(name + ": positions " + std::to_string(j) + " and " + std::to_string(j + 1) + " not adjacent");
    if (!is_c_stretched(g, w, c)) return Check::fail(name + ": not " + std::to_string(c) + "-stretched");
    if (!g.neighbors(h.neck).intersects(mine)) return Check::fail(name + ": neck has no neighbour");
    const int n = static_cast<int>(w.size());
    for (int j = 0; j < n; ++j)
      if ((j < c || j >= n - c) && g.adjacent(h.neck, w[j]))
        return Check::fail(name + ": neck adjacent to position " + std::to_string(j) + " within the first or last " +
                           std::to_string(c));
  }
  if (used.size() != g.vertex_count()) return Check::fail("graph: vertices outside neck and walks");
  return Check::pass();
}

// Neck adjacency along a walk.
inline BitString walk_bits(const Hassle& h, std::size_t walk) { return neck_bits(h.graph, h.neck, h.walks.at(walk)); }

// c fresh paths on |bits| vertices and a new neck adjacent to position j of
// every path iff bit j is 1.
inline Tassel tassel_from_bits(const BitString& bits, int c) {
  require_bits(bits);
  if (c < 1) throw std::invalid_argument("c must be >= 1");
  if (!has_one(bits)) throw std::invalid_argument("neck adjacency \"" + bits + "\" is all zero");
  if (!detail::padded_neck(bits, c))
    throw std::invalid_argument("padding violation: \"" + bits + "\" has a 1 among the first or last " +
                                std::to_string(c) + " positions");
  return build_tassel(bits, c);
}

// The tassel T_W of a walk in a host graph: checks that the sequence is a
// walk of matching length, then builds tassel_from_bits.
inline Tassel tassel_from_walk(const Graph& host, const Sequence& walk, const BitString& bits, int c) {
  if (walk.size() != bits.size())
    throw std::invalid_argument("walk has " + std::to_string(walk.size()) + " positions but " + std::to_string(bits.size()) +
                                " neck bits");
  for (Vertex v : walk) require_vertex(host, v);
  for (std::size_t j = 0; j + 1 < walk.size(); ++j)
    if (!host.adjacent(walk[j], walk[j + 1]))
      throw std::invalid_argument("walk positions " + std::to_string(j) + " and " + std::to_string(j + 1) + " are not adjacent");
  return tassel_from_bits(bits, c);
}

// ---- arrays ----

struct ArrayWitness {
  std::vector<Sequence> paths;
  std::vector<Vertex> apexes;
};

struct ArrayInstance {
  Graph graph;
  ArrayWitness witness;
};

inline Check is_n_array(const Graph& g, const ArrayWitness& w, int n) {
  if (static_cast<int>(w.paths.size()) != n) return Check::fail("paths: expected " + std::to_string(n));
  if (static_cast<int>(w.apexes.size()) != n) return Check::fail("apexes: expected " + std::to_string(n));
  VertexSet used(g.vertex_count());
  std::vector<VertexSet> sets;
  for (int i = 0; i < n; ++i) {
    const auto& p = w.paths[i];
    std::string name = "paths[" + std::to_string(i) + "]";
    if (p.empty() || !detail::in_range(g, p)) return Check::fail(name + ": empty or out of range");
    for (Vertex v : p) {
      if (used.contains(v)) return Check::fail(name + ": vertex " + std::to_string(v) + " already used");
      used.insert(v);
    }
    if (!is_induced_path(g, p)) return Check::fail(name + ": not an induced path");
    sets.push_back(detail::set_of(g, p));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!are_anticomplete(g, sets[i], sets[j]))
        return Check::fail("paths[" + std::to_string(i) + "] and paths[" + std::to_string(j) + "]: joined by an edge");
  for (int i = 0; i < n; ++i) {
    Vertex x = w.apexes[i];
    if (x < 0 || x >= g.vertex_count()) return Check::fail("apexes[" + std::to_string(i) + "]: out of range");
    if (used.contains(x)) return Check::fail("apexes[" + std::to_string(i) + "]: vertex already used");
    used.insert(x);
  }
  if (used.size() != g.vertex_count()) return Check::fail("graph: vertices outside paths and apexes");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(w.apexes[i], w.apexes[j]))
        return Check::fail("apexes[" + std::to_string(i) + "] and apexes[" + std::to_string(j) + "]: adjacent");
  for (int i = 0; i < n; ++i) {
    const auto& p = w.paths[i];
    int prev_last = -1;
    for (int j = 0; j < n; ++j) {
      int first = -1, last = -1;
      for (int pos = 0; pos < static_cast<int>(p.size()); ++pos)
        if (g.adjacent(w.apexes[j], p[pos])) {
          if (first == -1) first = pos;
          last = pos;
        }
      if (first == -1)
        return Check::fail("apexes[" + std::to_string(j) + "]: no neighbour in paths[" + std::to_string(i) + "]");
      if (first <= prev_last)
        return Check::fail("order: on paths[" + std::to_string(i) + "] a neighbour of apexes[" + std::to_string(j) +
                           "] does not come after all neighbours of apexes[" + std::to_string(j - 1) + "]");
      prev_last = last;
    }
  }
  return Check::pass();
}

// d copies T_1..T_d of a tassel with d paths. The apex x_i is the neck of
// T_i; u and v are the first and last stored vertices of each path, and u
// of P_j in T_i is joined to v of P_j in T_{i+1}. Array path L_j runs
// through P_j of T_1, T_2, ... each traversed from v to u.
inline ArrayInstance array_from_tassel(const Tassel& t) {
  if (auto k = is_c_tassel(t, 1); !k) throw std::invalid_argument("not a tassel: " + k.violation);
  const int d = static_cast<int>(t.paths.size());
  const int block = t.graph.vertex_count();
  auto copy = [block](int i, Vertex v) { return i * block + v; };
  std::vector<Edge> es;
  for (int i = 0; i < d; ++i)
    for (auto [a, b] : t.graph.edges()) es.emplace_back(copy(i, a), copy(i, b));
  for (int i = 0; i + 1 < d; ++i)
    for (int j = 0; j < d; ++j) es.emplace_back(copy(i, t.paths[j].front()), copy(i + 1, t.paths[j].back()));
  ArrayInstance out;
  out.graph = Graph::from_edges(d * block, es);
  for (int j = 0; j < d; ++j) {
    Sequence l;
    for (int i = 0; i < d; ++i)
      for (auto it = t.paths[j].rbegin(); it != t.paths[j].rend(); ++it) l.push_back(copy(i, *it));
    out.witness.paths.push_back(l);
  }
  for (int i = 0; i < d; ++i) out.witness.apexes.push_back(copy(i, t.neck));
  return out;
}

// Random n-array. For each path: length uniform in [lo, hi]; apex j gets an
// interval of length uniform in [1, floor(length / n)]; the leftover slack is
// split into n+1 gaps by n sorted uniform cut points in [0, slack]. Paths
// take ids first, in order, then the apexes.
inline ArrayInstance random_array(int n, int lo, int hi, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("array order must be >= 1");
  if (lo > hi) throw std::invalid_argument("empty path length range");
  if (lo < n) throw std::invalid_argument("path lengths must be at least the array order");
  SplitMix64 rng(seed);
  std::vector<int> lengths(n);
  for (int i = 0; i < n; ++i) lengths[i] = static_cast<int>(rng.uniform(lo, hi));
  int total = 0;
  for (int len : lengths) total += len;
  std::vector<Edge> es;
  ArrayInstance out;
  Vertex next = 0;
  for (int i = 0; i < n; ++i) {
    Sequence p;
    for (int k = 0; k < lengths[i]; ++k) {
      p.push_back(next++);
      if (k > 0) es.emplace_back(p[k - 1], p[k]);
    }
    out.witness.paths.push_back(p);
  }
  for (int j = 0; j < n; ++j) out.witness.apexes.push_back(total + j);
  for (int i = 0; i < n; ++i) {
    const int len = lengths[i];
    std::vector<int> iv(n);
    int used = 0;
    for (int j = 0; j < n; ++j) {
      iv[j] = static_cast<int>(rng.uniform(1, len / n));
      used += iv[j];
    }
    const int slack = len - used;
    std::vector<int> cuts(n);
    for (int j = 0; j < n; ++j) cuts[j] = static_cast<int>(rng.uniform(0, slack));
    std::sort(cuts.begin(), cuts.end());
    int pos = cuts[0];
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < iv[j]; ++k) es.emplace_back(out.witness.paths[i][pos + k], out.witness.apexes[j]);
      pos += iv[j];
      if (j + 1 < n) pos += cuts[j + 1] - cuts[j];
    }
  }
  out.graph = Graph::from_edges(total + n, es);
  return out;
}

// ---- cluster to hassle ----

struct HassleExtraction {
  bool ok = false;
  std::string failure;          // the violated precondition when !ok
  Hassle hassle;                // relabelled 0..k-1
  std::vector<Vertex> original;  // hassle vertex -> host vertex
  Vertex neck_in_host = -1;
  std::vector<int> chosen_paths;  // indices into L
};

// From a d-meager (2cd, 2c^2 d)-cluster (S, L): for each end u of each path,
// L_u is the longest subpath from u seeing fewer than cd vertices of S; each
// path then has an apex with a neighbour on it and none among its first and
// last c vertices; an apex chosen for at least c paths (smallest id first)
// becomes the neck of G[{x} + those paths].
inline HassleExtraction hassle_from_cluster(const Graph& g, const std::vector<Vertex>& s, const std::vector<Sequence>& l,
                                            int c, int d) {
  HassleExtraction out;
  auto refuse = [&](std::string why) {
    out.failure = std::move(why);
    return out;
  };
  if (c < 1 || d < 1) return refuse("parameters: c and d must be positive");
  if (static_cast<int>(s.size()) != 2 * c * d)
    return refuse("cluster size: |S| = " + std::to_string(s.size()) + ", expected " + std::to_string(2 * c * d));
  if (static_cast<int>(l.size()) != 2 * c * c * d)
    return refuse("cluster size: |L| = " + std::to_string(l.size()) + ", expected " + std::to_string(2 * c * c * d));
  try {
    if (auto k = is_cluster(g, s, l); !k) return refuse("cluster: " + k.violation);
    if (auto k = is_d_meager(g, s, l, d); !k) return refuse("meager: " + k.violation);
  } catch (const std::invalid_argument& e) {
    return refuse(std::string("cluster: ") + e.what());
  }
  std::vector<Vertex> apexes = s;
  std::sort(apexes.begin(), apexes.end());
  const VertexSet sset = VertexSet::of(g.vertex_count(), s);
  auto seen_by = [&](const Sequence& path, int from, int to) {
    VertexSet nb(g.vertex_count());
    for (int i = from; i < to; ++i) nb |= g.neighbors(path[i]);
    return nb & sset;
  };
  std::vector<Vertex> x_of(l.size(), -1);
  for (std::size_t li = 0; li < l.size(); ++li) {
    const Sequence& p = l[li];
    const int n = static_cast<int>(p.size());
    for (int end = 0; end < 2; ++end) {
      int len = 0;
      while (len < n) {
        int from = end == 0 ? 0 : n - len - 1, to = end == 0 ? len + 1 : n;
        if (seen_by(p, from, to).size() >= c * d) break;
        ++len;
      }
      if (len < c) throw std::logic_error("hassle extraction: end segment shorter than c on a valid cluster");
    }
    const int edge = std::min(c, n);
    VertexSet blocked = seen_by(p, 0, edge) | seen_by(p, n - edge, n);
    VertexSet touching = seen_by(p, 0, n);
    for (Vertex x : apexes)
      if (touching.contains(x) && !blocked.contains(x)) {
        x_of[li] = x;
        break;
      }
    if (x_of[li] == -1) throw std::logic_error("hassle extraction: no admissible apex on a valid cluster");
  }
  Vertex neck = -1;
  for (Vertex x : apexes)
    if (std::count(x_of.begin(), x_of.end(), x) >= c) {
      neck = x;
      break;
    }
  if (neck == -1) throw std::logic_error("hassle extraction: pigeonhole failed on a valid cluster");
  VertexSet keep(g.vertex_count());
  keep.insert(neck);
  for (std::size_t li = 0; li < l.size() && static_cast<int>(out.chosen_paths.size()) < c; ++li)
    if (x_of[li] == neck) {
      out.chosen_paths.push_back(static_cast<int>(li));
      for (Vertex v : l[li]) keep.insert(v);
    }
  auto sub = induced_subgraph(g, keep);
  std::vector<Vertex> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i) index[sub.original[i]] = static_cast<Vertex>(i);
  out.hassle.graph = sub.graph;
  out.hassle.neck = index[neck];
  for (int li : out.chosen_paths) {
    Sequence w;
    for (Vertex v : l[li]) w.push_back(index[v]);
    out.hassle.walks.push_back(w);
  }
  out.original = sub.original;
  out.neck_in_host = neck;
  out.ok = true;
  return out;
}

}  // namespace tassel
