#pragma once

#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "tassel/graph.hpp"

namespace tassel {

namespace detail {

// Unit-capacity residual network with adjacency lists of arc ids.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(int nodes) : out_(nodes) {}

  void add_arc(int from, int to, int cap) {
    out_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    out_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  // One BFS augmentation in arc-insertion order. Returns false if the sink
  // is unreachable.
  bool augment(int source, int sink) {
    std::vector<int> via(out_.size(), -1);
    std::vector<bool> seen(out_.size(), false);
    std::queue<int> q;
    q.push(source);
    seen[source] = true;
    while (!q.empty() && !seen[sink]) {
      int v = q.front();
      q.pop();
      for (int a : out_[v]) {
        int w = arcs_[a].to;
        if (arcs_[a].cap > 0 && !seen[w]) {
          seen[w] = true;
          via[w] = a;
          q.push(w);
        }
      }
    }
    if (!seen[sink]) return false;
    for (int v = sink; v != source;) {
      int a = via[v];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      v = arcs_[a ^ 1].to;
    }
    return true;
  }

  struct Arc {
    int to;
    int cap;
  };
  const std::vector<int>& out(int v) const { return out_[v]; }
  Arc& arc(int a) { return arcs_[a]; }
  bool is_forward(int a) const { return (a & 1) == 0; }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

// Maximum family of pairwise internally disjoint x-y paths (Menger), found by
// unit vertex-capacity flow on the split graph. The edge xy, if present, is
// one of the paths. Paths are listed from x to y and may have chords.
inline std::vector<std::vector<Vertex>> disjoint_paths(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, x);
  require_vertex(g, y);
  if (x == y) throw std::invalid_argument("disjoint paths need two distinct vertices");
  const int n = g.vertex_count();
  // node 2v = v_in, 2v+1 = v_out
  detail::UnitFlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v)
    if (v != x && v != y) net.add_arc(2 * v, 2 * v + 1, 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, 1);
    net.add_arc(2 * v + 1, 2 * u, 1);
  }
  const int source = 2 * x + 1, sink = 2 * y;
  while (net.augment(source, sink)) {
  }

  // Decompose: follow saturated forward arcs from x_out.
  std::vector<std::vector<Vertex>> paths;
  for (int a0 : net.out(source)) {
    if (!net.is_forward(a0) || net.arc(a0).cap != 0) continue;
    std::vector<Vertex> path{x};
    int a = a0;
    net.arc(a).cap = -1;  // consumed
    int node = net.arc(a).to;
    while (node != sink) {
      Vertex v = node / 2;
      path.push_back(v);
      int out_node = 2 * v + 1;
      int next = -1;
      for (int b : net.out(out_node))
        if (net.is_forward(b) && net.arc(b).cap == 0) {
          next = b;
          break;
        }
      net.arc(next).cap = -1;
      node = net.arc(next).to;
    }
    path.push_back(y);
    paths.push_back(std::move(path));
  }
  return paths;
}

inline int disjoint_paths_count(const Graph& g, Vertex x, Vertex y) {
  return static_cast<int>(disjoint_paths(g, x, y).size());
}

}  // namespace tassel
