#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tassel/tassel.hpp"

using namespace tassel;

namespace {

// Six paths of three vertices. Vertex k of path i < 3 is joined to vertex i
// of path 3 + k, so every vertex sees exactly one other path.
struct SixPaths {
  Graph g;
  std::vector<Sequence> w;
};

SixPaths six_paths() {
  SixPaths s;
  std::vector<Edge> es;
  auto id = [](int path, int k) { return 3 * path + k; };
  for (int i = 0; i < 6; ++i) {
    s.w.push_back({id(i, 0), id(i, 1), id(i, 2)});
    es.emplace_back(id(i, 0), id(i, 1));
    es.emplace_back(id(i, 1), id(i, 2));
  }
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) es.emplace_back(id(i, k), id(3 + k, i));
  s.g = Graph::from_edges(18, es);
  return s;
}

// Three apexes 0..2 and three paths of three vertices; apex i sees vertex i
// of every path.
gen::Cluster three_by_three() {
  gen::Cluster cl;
  std::vector<Edge> es;
  cl.apexes = {0, 1, 2};
  for (int j = 0; j < 3; ++j) {
    Sequence p = {3 + 3 * j, 4 + 3 * j, 5 + 3 * j};
    es.emplace_back(p[0], p[1]);
    es.emplace_back(p[1], p[2]);
    for (int i = 0; i < 3; ++i) es.emplace_back(i, p[i]);
    cl.paths.push_back(p);
  }
  cl.graph = Graph::from_edges(12, es);
  return cl;
}

BlockCertificate k4_certificate() {
  BlockCertificate cert;
  cert.block = {0, 1, 2, 3};
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = x + 1; y < 4; ++y) {
      std::vector<Sequence> paths = {{x, y}};
      for (Vertex z = 0; z < 4; ++z)
        if (z != x && z != y) paths.push_back({x, z, y});
      cert.systems[{x, y}] = paths;
    }
  return cert;
}

}  // namespace

TEST(Block, Examples) {
  EXPECT_TRUE(is_k_block(complete(4), {0, 1, 2, 3}, 3));
  EXPECT_TRUE(is_k_block(cycle_graph(5), {0, 2, 4}, 2));
  EXPECT_FALSE(is_k_block(cycle_graph(5), {0, 2, 4}, 3));
  EXPECT_FALSE(is_k_block(path_graph(5), {0, 4}, 2));
  EXPECT_THROW(is_k_block(complete(3), {0}, 1), std::invalid_argument);
  EXPECT_THROW(is_k_block(complete(3), {0, 0}, 1), std::invalid_argument);
}

TEST(Block, AntitoneInK) {
  SplitMix64 rng(41);
  for (int i = 0; i < 60; ++i) {
    int n = static_cast<int>(rng.uniform(4, 9));
    Graph g = oracle::random_graph(rng, n, 55);
    std::vector<Vertex> b = {0, 1, static_cast<Vertex>(n - 1)};
    bool prev = true;
    for (int k = 1; k <= 5; ++k) {
      bool now = is_k_block(g, b, k);
      if (!prev) EXPECT_FALSE(now);
      prev = now;
    }
  }
}

TEST(Block, MatchesPathPacking) {
  SplitMix64 rng(42);
  for (int i = 0; i < 60; ++i) {
    int n = static_cast<int>(rng.uniform(3, 9));
    Graph g = oracle::random_graph(rng, n, 50);
    std::vector<Vertex> b = {0, 1, 2};
    int least = n;
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) least = std::min(least, oracle::path_packing(g, x, y));
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(is_k_block(g, b, k), k <= 3 && least >= k) << i << " " << k;
  }
}

// Block {0, 1, 2}; every pair also has three private middle vertices.
Graph private_triangle(BlockCertificate& cert) {
  std::vector<Edge> es;
  cert.block = {0, 1, 2};
  Vertex next = 3;
  for (Vertex x = 0; x < 3; ++x)
    for (Vertex y = x + 1; y < 3; ++y) {
      std::vector<Sequence> paths;
      for (int k = 0; k < 3; ++k) {
        es.emplace_back(x, next);
        es.emplace_back(next, y);
        paths.push_back({x, next, y});
        ++next;
      }
      cert.systems[{x, y}] = paths;
    }
  return Graph::from_edges(next, es);
}

TEST(BlockCertificate, CompleteGraphIsBlockButNotStrong) {
  Graph k4 = complete(4);
  auto cert = k4_certificate();
  EXPECT_TRUE(verify_block_certificate(k4, cert, 3));
  EXPECT_TRUE(verify_block_certificate(k4, cert, 3, 2));
  EXPECT_FALSE(verify_block_certificate(k4, cert, 4));
  auto r = verify_block_certificate(k4, cert, 3, std::nullopt, true);
  EXPECT_EQ(r.violation, "strong: interior vertex 2 of pair {0,1} lies on a path of pair {0,2}");
}

TEST(BlockCertificate, StrongPrivatePaths) {
  BlockCertificate cert;
  Graph g = private_triangle(cert);
  EXPECT_TRUE(verify_block_certificate(g, cert, 3, 2, true));
  EXPECT_TRUE(is_k_block(g, cert.block, 3));
  EXPECT_TRUE(verify_web(g, web_from_block_certificate(g, cert), 3));
}

TEST(BlockCertificate, ShortViolation) {
  Graph k4 = complete(4);
  auto cert = k4_certificate();
  cert.systems[{0, 1}] = {{0, 1}, {0, 2, 3, 1}};
  auto r = verify_block_certificate(k4, cert, 2, 2);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.violation, "short: path [0,2,3,1] for {0,1} has length 3 > d");
  EXPECT_TRUE(verify_block_certificate(k4, cert, 2, 3));
}

TEST(BlockCertificate, StrongNamesSharedVertex) {
  Graph g = cycle_graph(6);
  BlockCertificate cert;
  cert.block = {0, 2, 4};
  cert.systems[{0, 2}] = {{0, 1, 2}, {0, 5, 4, 3, 2}};
  cert.systems[{0, 4}] = {{0, 5, 4}, {0, 1, 2, 3, 4}};
  cert.systems[{2, 4}] = {{2, 3, 4}, {2, 1, 0, 5, 4}};
  EXPECT_TRUE(verify_block_certificate(g, cert, 2));
  auto r = verify_block_certificate(g, cert, 2, std::nullopt, true);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.violation.rfind("strong:", 0), 0u);
  EXPECT_NE(r.violation.find("interior vertex 1 "), std::string::npos) << r.violation;
}

TEST(BlockCertificate, ErrorMessages) {
  Graph k4 = complete(4);
  auto cert = k4_certificate();
  cert.systems.erase({2, 3});
  EXPECT_EQ(verify_block_certificate(k4, cert, 3).violation, "malformed: no path system for pair {2,3}");
  cert = k4_certificate();
  cert.systems[{0, 1}][1] = {0, 3, 1};
  EXPECT_NE(verify_block_certificate(k4, cert, 3).violation.find("disjointness"), std::string::npos);
  cert = k4_certificate();
  cert.systems[{0, 1}].pop_back();
  EXPECT_EQ(verify_block_certificate(k4, cert, 3).violation, "count: pair {0,1} has 2 paths, fewer than k");
  cert = k4_certificate();
  cert.block = {0, 7};
  EXPECT_EQ(verify_block_certificate(k4, cert, 2).violation, "malformed: block vertex 7 out of range");
  cert = k4_certificate();
  cert.systems[{0, 1}][1] = {0, 2, 1, 3};
  EXPECT_NE(verify_block_certificate(k4, cert, 3).violation.find("does not join"), std::string::npos);
}

TEST(BlockCertificate, MengerCertificateVerifies) {
  SplitMix64 rng(43);
  for (int i = 0; i < 40; ++i) {
    int n = static_cast<int>(rng.uniform(4, 10));
    Graph g = oracle::random_graph(rng, n, 60);
    std::vector<Vertex> b = {0, 1, 2};
    auto cert = menger_certificate(g, b);
    int k = 4;
    while (k > 0 && !is_k_block(g, b, k)) --k;
    if (k == 0) continue;
    EXPECT_TRUE(verify_block_certificate(g, cert, k)) << verify_block_certificate(g, cert, k).violation;
  }
}

TEST(Polypath, Examples) {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  std::vector<Sequence> w = {{0, 1, 2}, {3, 4, 5}};
  EXPECT_TRUE(is_polypath(g, w));
  EXPECT_TRUE(is_d_loose(g, w, 1));
  auto f = fancy_subsets(g, w, 1);
  EXPECT_TRUE(f.supported);
  EXPECT_TRUE(f.subsets.empty());
  std::vector<Sequence> overlap = {{0, 1, 2}, {2, 3}};
  EXPECT_FALSE(is_polypath(g, overlap));
  EXPECT_THROW(is_d_loose(g, overlap, 2), std::invalid_argument);
  std::vector<Sequence> chord = {{0, 1, 2}};
  Graph tri = complete(3);
  EXPECT_FALSE(is_polypath(tri, chord));
}

TEST(Polypath, SixPathsLooseAndFancy) {
  auto s = six_paths();
  ASSERT_TRUE(is_polypath(s.g, s.w));
  EXPECT_TRUE(is_d_loose(s.g, s.w, 2));
  EXPECT_FALSE(is_d_loose(s.g, s.w, 1));
  auto f = fancy_subsets(s.g, s.w, 3);
  ASSERT_TRUE(f.supported);
  EXPECT_EQ(f.subsets, (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}}));
  for (const auto& sub : f.subsets) EXPECT_TRUE(check_biclique_minor(s.g, fancy_minor(s.w, sub)));
}

TEST(Polypath, FancyCaps) {
  auto s = six_paths();
  EXPECT_FALSE(fancy_subsets(s.g, s.w, 4).supported);
  EXPECT_TRUE(fancy_subsets(s.g, s.w, 3).supported);
  std::vector<Sequence> many;
  for (Vertex v = 0; v < 17; ++v) many.push_back({v});
  EXPECT_FALSE(fancy_subsets(Graph(17), many, 1).supported);
  EXPECT_THROW(fancy_subsets(s.g, s.w, 0), std::invalid_argument);
}

TEST(Polypath, LooseIsMonotoneAndFancyGivesMinors) {
  SplitMix64 rng(44);
  for (int i = 0; i < 80; ++i) {
    int paths = static_cast<int>(rng.uniform(2, 6));
    std::vector<Sequence> w;
    std::vector<Edge> es;
    Vertex next = 0;
    for (int j = 0; j < paths; ++j) {
      int len = static_cast<int>(rng.uniform(1, 4));
      Sequence p;
      for (int k = 0; k < len; ++k) {
        p.push_back(next++);
        if (k) es.emplace_back(p[k - 1], p[k]);
      }
      w.push_back(p);
    }
    for (int e = 0; e < 8; ++e) {
      Vertex u = static_cast<Vertex>(rng.uniform(0, next - 1)), v = static_cast<Vertex>(rng.uniform(0, next - 1));
      int pu = 0, pv = 0;
      for (int j = 0; j < paths; ++j)
        for (Vertex x : w[j]) {
          if (x == u) pu = j;
          if (x == v) pv = j;
        }
      if (pu != pv) es.emplace_back(u, v);
    }
    Graph g = Graph::from_edges(next, es);
    bool prev = false;
    for (int d = 1; d <= paths; ++d) {
      bool now = is_d_loose(g, w, d);
      if (prev) EXPECT_TRUE(now);
      prev = now;
    }
    EXPECT_TRUE(is_d_loose(g, w, paths));
    for (int wp = 1; wp <= std::min(3, paths); ++wp)
      for (const auto& sub : fancy_subsets(g, w, wp).subsets)
        EXPECT_TRUE(check_biclique_minor(g, fancy_minor(w, sub)));
  }
}

TEST(Cluster, Examples) {
  auto cl = three_by_three();
  EXPECT_TRUE(is_cluster(cl.graph, cl.apexes, cl.paths));
  EXPECT_TRUE(is_d_meager(cl.graph, cl.apexes, cl.paths, 2));
  EXPECT_FALSE(is_d_meager(cl.graph, cl.apexes, cl.paths, 1));
  EXPECT_TRUE(check_biclique_minor(cl.graph, cluster_minor(cl.apexes, cl.paths)));
  auto es = cl.graph.edges();
  std::erase(es, Edge{0, 9});
  Graph missing = Graph::from_edges(12, es);
  EXPECT_EQ(is_cluster(missing, cl.apexes, cl.paths).violation, "apex 0 has no neighbour in path 2");
  EXPECT_THROW(is_cluster(cl.graph, {0, 3}, cl.paths), std::invalid_argument);
}

TEST(Cluster, MeagerFailureNamesVertex) {
  auto cl = three_by_three();
  auto es = cl.graph.edges();
  es.emplace_back(1, 3);
  Graph g = Graph::from_edges(12, es);
  auto r = is_d_meager(g, cl.apexes, cl.paths, 2);
  EXPECT_EQ(r.violation, "path vertex 3 has 2 neighbours in S, not fewer than 2");
}

TEST(Cluster, RandomClustersGiveMinors) {
  SplitMix64 rng(45);
  for (int i = 0; i < 30; ++i) {
    auto cl = gen::random_cluster(rng, static_cast<int>(rng.uniform(1, 5)), static_cast<int>(rng.uniform(1, 5)));
    ASSERT_TRUE(is_cluster(cl.graph, cl.apexes, cl.paths));
    EXPECT_TRUE(is_d_meager(cl.graph, cl.apexes, cl.paths, 2));
    EXPECT_TRUE(check_biclique_minor(cl.graph, cluster_minor(cl.apexes, cl.paths)));
  }
}

TEST(BicliqueMinor, RejectsBadModels) {
  Graph p4 = path_graph(4);
  BicliqueMinor m{{{0}}, {{2, 3}}};
  EXPECT_EQ(check_biclique_minor(p4, m).violation, "branch sets 0 and 0 are not joined");
  BicliqueMinor split{{{0, 2}}, {{1}}};
  EXPECT_FALSE(check_biclique_minor(p4, split));
}

TEST(Web, Examples) {
  Graph k4 = complete(4);
  WebCertificate web;
  web.web = {0, 1, 2, 3};
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = x + 1; y < 4; ++y) web.paths[{x, y}] = {x, y};
  EXPECT_TRUE(verify_web(k4, web, 4));
  EXPECT_EQ(verify_web(k4, web, 5).clause, "W1");
  web.paths.erase({0, 1});
  EXPECT_EQ(verify_web(k4, web).clause, "W2");
}

TEST(Web, CrossingPathsViolateW3) {
  // two paths 0-4-1 and 2-4-3 through a shared centre
  Graph g = Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  WebCertificate web;
  web.web = {0, 1, 2, 3};
  web.paths[{0, 1}] = {0, 4, 1};
  web.paths[{2, 3}] = {2, 4, 3};
  web.paths[{0, 2}] = {0, 2};
  web.paths[{0, 3}] = {0, 3};
  web.paths[{1, 2}] = {1, 2};
  web.paths[{1, 3}] = {1, 3};
  auto r = verify_web(g, web);
  EXPECT_EQ(r.clause, "W3");
  EXPECT_NE(r.message.find("vertex 4"), std::string::npos);
}

TEST(Web, FromBlockCertificate) {
  Graph k4 = complete(4);
  EXPECT_TRUE(verify_web(k4, web_from_block_certificate(k4, k4_certificate()), 4));
}

TEST(Web, ShortcutGivesInducedPath) {
  Graph g = complete(5);
  Sequence p = {0, 1, 2, 3, 4};
  EXPECT_EQ(shortcut_path(g, p), (Sequence{0, 4}));
  Graph c6 = cycle_graph(6);
  Sequence q = {0, 1, 2, 3};
  EXPECT_EQ(shortcut_path(c6, q), q);
}
