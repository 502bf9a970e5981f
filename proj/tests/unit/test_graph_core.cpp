#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support/oracles.hpp"
#include "tassel/tassel.hpp"

using namespace tassel;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.vertex_count(), es);
}

std::vector<int> shuffled(SplitMix64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(0, i)]);
  return p;
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(64));
  EXPECT_EQ(s.first(), 0);
  EXPECT_EQ(s.next(1), 64);
  EXPECT_EQ(s.next(130), -1);
  s.erase(0);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{64, 129}));
  VertexSet t = VertexSet::full(130);
  EXPECT_TRUE(s.is_subset_of(t));
  EXPECT_EQ((t - s).size(), 128);
  EXPECT_FALSE((t - s).intersects(s));
}

TEST(Graph, FromEdgesExamples) {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_path(p3));
  EXPECT_EQ(p3.edge_count(), 2);
  Graph k1 = Graph::from_edges(1, {});
  EXPECT_EQ(k1.vertex_count(), 1);
  EXPECT_EQ(k1.edge_count(), 0);
  Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(k4.degree(v), 3);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(2, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(2, {{-1, 0}}), std::invalid_argument);
}

TEST(Graph, ParallelEdgesCollapse) {
  Graph g = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(complete(4), VertexSet(4, {0, 1, 3})).graph, complete(3));
  Graph c5 = cycle_graph(5);
  EXPECT_EQ(induced_subgraph(c5, c5.all()).graph, c5);
  auto sub = induced_subgraph(c5, VertexSet(5, {1, 2, 3, 4}));
  EXPECT_TRUE(is_path(sub.graph));
  EXPECT_EQ(sub.graph.vertex_count(), 4);
  EXPECT_EQ(sub.original, (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(LineGraph, Examples) {
  EXPECT_EQ(line_graph(path_graph(3)), path_graph(2));
  EXPECT_TRUE(is_isomorphic(line_graph(complete(3)), complete(3)));
  EXPECT_TRUE(is_isomorphic(line_graph(complete_bipartite(1, 3)), complete(3)));
}

TEST(LineGraph, VertexAndEdgeCounts) {
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Graph f = oracle::random_graph(rng, static_cast<int>(rng.uniform(1, 10)), 40);
    Graph l = line_graph(f);
    int expect = 0;
    for (Vertex v = 0; v < f.vertex_count(); ++v) expect += f.degree(v) * (f.degree(v) - 1) / 2;
    EXPECT_EQ(l.vertex_count(), f.edge_count());
    EXPECT_EQ(l.edge_count(), expect);
  }
}

TEST(Subdivide, Examples) {
  EXPECT_TRUE(is_isomorphic(subdivide(complete(3), 1), cycle_graph(6)));
  Graph w = wall(3);
  EXPECT_EQ(subdivide(w, 0), w);
  EXPECT_TRUE(is_isomorphic(subdivide(path_graph(2), 3), path_graph(5)));
  std::vector<int> extra = {2, 0, 1};
  Graph s = subdivide(complete(3), extra);
  EXPECT_EQ(s.vertex_count(), 6);
  EXPECT_TRUE(is_leq_r_subdivision(extra, 2));
  EXPECT_FALSE(is_leq_r_subdivision(extra, 1));
  EXPECT_FALSE(is_proper_subdivision(extra));
}

TEST(Subdivide, SuppressingNewVerticesRecoversF) {
  SplitMix64 rng(12);
  for (int i = 0; i < 40; ++i) {
    Graph f = oracle::random_graph(rng, static_cast<int>(rng.uniform(3, 8)), 50);
    std::vector<int> extra(f.edge_count());
    for (auto& e : extra) e = static_cast<int>(rng.uniform(0, 3));
    Graph s = subdivide(f, extra);
    // new vertices are n.. and have degree two; contract them away
    std::vector<Edge> es;
    const int n = f.vertex_count();
    for (auto [u, v] : s.edges())
      if (u < n && v < n) es.emplace_back(u, v);
    for (Vertex x = n; x < s.vertex_count(); ++x) {
      EXPECT_EQ(s.degree(x), 2);
      std::vector<Vertex> ends;
      for (Vertex y : s.neighbors(x).members()) {
        Vertex prev = x, cur = y;
        while (cur >= n) {
          auto nb = s.neighbors(cur).members();
          Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
          prev = cur;
          cur = nxt;
        }
        ends.push_back(cur);
      }
      es.emplace_back(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
    }
    EXPECT_EQ(Graph::from_edges(n, es), f);
  }
}

TEST(FindInduced, Examples) {
  EXPECT_EQ(find_induced(complete(3), complete(4)).status, SearchStatus::found);
  EXPECT_EQ(find_induced(path_graph(4), complete(4)).status, SearchStatus::none);
  auto r = find_induced(path_graph(4), cycle_graph(5));
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(is_induced_embedding(path_graph(4), cycle_graph(5), r.embedding));
}

TEST(FindInduced, BudgetExhaustion) {
  NodeBudget budget(3);
  auto r = find_induced(wall(3), add_isolated_vertex(wall(3)), budget);
  EXPECT_EQ(r.status, SearchStatus::exhausted);
  EXPECT_TRUE(budget.exhausted());
}

TEST(FindInduced, AgreesWithInjectiveMapOracle) {
  SplitMix64 rng(13);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    Graph host = oracle::random_graph(rng, static_cast<int>(rng.uniform(3, 9)), static_cast<int>(rng.uniform(20, 80)));
    Graph pat = oracle::random_graph(rng, static_cast<int>(rng.uniform(1, 5)), static_cast<int>(rng.uniform(20, 80)));
    auto r = find_induced(pat, host);
    bool expect = oracle::contains_induced(host, pat);
    ASSERT_EQ(r.status == SearchStatus::found, expect) << "case " << i;
    if (expect) {
      ++found;
      EXPECT_TRUE(is_induced_embedding(pat, host, r.embedding));
    }
  }
  EXPECT_GT(found, 50);
}

TEST(FindInduced, EveryEnumeratedEmbeddingIsInduced) {
  Graph host = wall(3);
  int count = 0;
  for_each_induced(path_graph(3), host, [&](const Embedding& e) {
    EXPECT_TRUE(is_induced_embedding(path_graph(3), host, e));
    ++count;
    return true;
  });
  // ordered induced P_3 copies: 2 * sum over v of C(deg v, 2), walls have no triangles
  int expect = 0;
  for (Vertex v = 0; v < host.vertex_count(); ++v) expect += host.degree(v) * (host.degree(v) - 1);
  EXPECT_EQ(count, expect);
}

TEST(CanonicalCode, InvariantUnderRelabelling) {
  SplitMix64 rng(14);
  for (int i = 0; i < 60; ++i) {
    int n = static_cast<int>(rng.uniform(1, 9));
    Graph g = oracle::random_graph(rng, n, 45);
    Graph h = permuted(g, shuffled(rng, n));
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_TRUE(is_isomorphic(g, h));
  }
  EXPECT_NE(canonical_code(path_graph(4)), canonical_code(complete_bipartite(1, 3)));
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(complete(3), complete(3))));
}

TEST(DisjointPaths, Examples) {
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = x + 1; y < 4; ++y) EXPECT_EQ(disjoint_paths_count(complete(4), x, y), 3);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(disjoint_paths_count(cycle_graph(n), 0, n / 2), 2);
  EXPECT_EQ(disjoint_paths_count(path_graph(6), 0, 5), 1);
  EXPECT_THROW(disjoint_paths(complete(3), 1, 1), std::invalid_argument);
}

TEST(DisjointPaths, MatchesPathPacking) {
  SplitMix64 rng(15);
  for (int i = 0; i < 200; ++i) {
    int n = static_cast<int>(rng.uniform(2, 9));
    Graph g = oracle::random_graph(rng, n, static_cast<int>(rng.uniform(15, 85)));
    Vertex x = 0, y = n - 1;
    auto paths = disjoint_paths(g, x, y);
    ASSERT_EQ(static_cast<int>(paths.size()), oracle::path_packing(g, x, y)) << "case " << i;
    std::set<Vertex> interior;
    for (const auto& p : paths) {
      EXPECT_EQ(p.front(), x);
      EXPECT_EQ(p.back(), y);
      EXPECT_TRUE(is_simple_path(g, p));
      for (std::size_t k = 1; k + 1 < p.size(); ++k) EXPECT_TRUE(interior.insert(p[k]).second);
    }
  }
}

TEST(Predicates, Examples) {
  Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(are_anticomplete(two_k2, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})));
  EXPECT_THROW(are_anticomplete(two_k2, VertexSet(4, {0, 1}), VertexSet(4, {1, 2})), std::invalid_argument);
  EXPECT_FALSE(is_path(cycle_graph(4)));
  EXPECT_TRUE(is_path(complete(1)));
  EXPECT_FALSE(is_path(Graph(0)));
  EXPECT_TRUE(is_stable_set(complete_bipartite(3, 3), VertexSet(6, {0, 1, 2})));
  EXPECT_FALSE(is_stable_set(complete_bipartite(3, 3), VertexSet(6, {0, 3})));
  EXPECT_EQ(components(two_k2).size(), 2u);
  EXPECT_TRUE(is_connected(wall(3)));
}

TEST(Predicates, InducedVersusSimplePaths) {
  Graph k4 = complete(4);
  std::vector<Vertex> seq = {0, 1, 2};
  EXPECT_TRUE(is_simple_path(k4, seq));
  EXPECT_FALSE(is_induced_path(k4, seq));
  std::vector<Vertex> repeat = {0, 1, 0};
  EXPECT_FALSE(is_simple_path(k4, repeat));
}

TEST(Predicates, Bipartition) {
  EXPECT_TRUE(bipartition(wall(3)).has_value());
  EXPECT_TRUE(bipartition(complete_bipartite(2, 3)).has_value());
  EXPECT_FALSE(bipartition(cycle_graph(5)).has_value());
}

TEST(InducedSubgraph, TreewidthIsMonotone) {
  SplitMix64 rng(16);
  for (int i = 0; i < 40; ++i) {
    int n = static_cast<int>(rng.uniform(4, 12));
    Graph g = oracle::random_graph(rng, n, 40);
    VertexSet keep(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.coin()) keep.insert(v);
    EXPECT_LE(treewidth_exact(induced_subgraph(g, keep).graph).width, treewidth_exact(g).width);
  }
}
