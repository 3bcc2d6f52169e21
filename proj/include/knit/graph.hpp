#pragma once

/**
 * Undirected simple graph on at most 64 vertices with one adjacency word per
 * vertex, plus the connectivity primitives every other module builds on.
 */

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "knit/errors.hpp"
#include "knit/vertex_set.hpp"

namespace knit {

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw InputError("graph order must be in 1..64, got " + std::to_string(n));
  }

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  auto order() const -> int { return n_; }
  auto vertices() const -> VertexSet { return VertexSet::prefix(n_); }

  auto add_edge(int u, int v) -> void {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  auto remove_edge(int u, int v) -> void {
    check_vertex(u);
    check_vertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  auto adjacent(int u, int v) const -> bool { return adj_[u].contains(v); }
  auto neighbors(int u) const -> VertexSet { return adj_[u]; }
  auto degree(int u) const -> int { return adj_[u].size(); }

  auto edge_count() const -> int {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  auto min_degree() const -> int {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  auto edges() const -> std::vector<std::pair<int, int>> {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u] - VertexSet::prefix(u + 1)) out.emplace_back(u, v);
    return out;
  }

  auto check_vertex(int u) const -> void {
    if (u < 0 || u >= n_)
      throw InputError("vertex " + std::to_string(u) + " out of range for order " + std::to_string(n_));
  }

  friend auto operator==(const Graph& a, const Graph& b) -> bool {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// N(u) ∩ t; its size is the degree of u into t.
inline auto neighbors_in(const Graph& g, int u, VertexSet t) -> VertexSet {
  g.check_vertex(u);
  return g.neighbors(u) & t;
}

/// N(s) - s within the given universe.
inline auto open_neighborhood(const Graph& g, VertexSet s, VertexSet within) -> VertexSet {
  VertexSet out;
  for (int v : s) out |= g.neighbors(v);
  return (out & within) - s;
}

/// Vertices of `within` reachable from `seed` through `within`. The seed
/// itself is kept even where it lies outside `within`.
inline auto reach(const Graph& g, VertexSet seed, VertexSet within) -> VertexSet {
  VertexSet seen = seed;
  VertexSet frontier = seed;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline auto is_connected(const Graph& g, VertexSet s) -> bool {
  if (s.empty()) return true;
  return reach(g, VertexSet::single(s.front()), s) == s;
}

/// Maximal connected pieces of the subgraph induced by s, ordered by minimum vertex.
inline auto components(const Graph& g, VertexSet s) -> std::vector<VertexSet> {
  if (!s.subset_of(g.vertices())) throw InputError("vertex set exceeds graph order");
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet piece = reach(g, VertexSet::single(rest.front()), s);
    out.push_back(piece);
    rest -= piece;
  }
  return out;
}

inline auto component_count(const Graph& g, VertexSet s) -> int {
  int count = 0;
  VertexSet rest = s;
  while (!rest.empty()) {
    rest -= reach(g, VertexSet::single(rest.front()), s);
    ++count;
  }
  return count;
}

}  // namespace knit
