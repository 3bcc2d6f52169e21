#pragma once

/**
 * Graph families used by the verification harness: the two-cliques-glued
 * sharpness graph with its unsolvable instance, seeded random graphs with a
 * minimum-degree floor, and small named baselines.
 */

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "knit/errors.hpp"
#include "knit/graph.hpp"
#include "knit/knit_solver.hpp"

namespace knit {

struct SharpnessWitness {
  Graph graph;
  VertexSet a_side;
  VertexSet b_mid;
  VertexSet c_side;
  int x = -1;  ///< least vertex of a_side
  int y = -1;  ///< least vertex of c_side
  /// Terminals b_mid ∪ {x, y}; blocks {x, y} then the singletons of b_mid.
  KnitInstance instance;
  /// Non-empty when (n, k) lies outside n >= 2k+3, k >= 5.
  std::string warning;
};

/// |A| = ⌊(n-k+2)/2⌋, |B| = k-2, |C| = ⌈(n-k+2)/2⌉, with A∪B and B∪C cliques
/// and no A-C edges; vertices numbered A, then B, then C.
inline auto sharpness_graph(int n, int k) -> SharpnessWitness {
  if (n < 1 || n > kMaxVertices) throw InputError("sharpness_graph: n must be in 1..64");
  if (k < 2) throw InputError("sharpness_graph: k must be at least 2");
  if (k - 2 >= n) throw InputError("sharpness_graph: k - 2 must be below n");
  const int rest = n - (k - 2);
  const int a = rest / 2;
  if (a < 1) throw InputError("sharpness_graph: n too small for both sides (need n >= k)");

  SharpnessWitness w;
  w.a_side = VertexSet::prefix(a);
  w.b_mid = VertexSet::prefix(a + k - 2) - w.a_side;
  w.c_side = VertexSet::prefix(n) - VertexSet::prefix(a + k - 2);
  Graph g(n);
  auto clique = [&](VertexSet s) {
    for (int u : s)
      for (int v : s - VertexSet::prefix(u + 1)) g.add_edge(u, v);
  };
  clique(w.a_side | w.b_mid);
  clique(w.b_mid | w.c_side);
  w.graph = g;
  w.x = w.a_side.front();
  w.y = w.c_side.front();

  std::vector<VertexSet> blocks{VertexSet{w.x, w.y}};
  for (int b : w.b_mid) blocks.push_back(VertexSet::single(b));
  w.instance = make_instance(g, std::move(blocks));

  if (n < 2 * k + 3 || k < 5)
    w.warning = "parameters (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                ") lie outside the regime n >= 2k+3, k >= 5";
  return w;
}

/// Minimum degree of the sharpness graph: ⌊(n+k)/2⌋ - 2.
constexpr auto sharpness_min_degree(int n, int k) -> int { return (n + k) / 2 - 2; }

/// Erdős–Rényi draw at p = d/(n-1), then edges from the lowest deficient
/// vertex to a uniformly chosen non-neighbour until δ >= d. Deterministic in seed.
inline auto random_min_degree_graph(int n, int d, std::uint64_t seed) -> Graph {
  Graph g(n);
  if (d < 0 || d >= n) throw InputError("random_min_degree_graph: need 0 <= d < n");
  std::mt19937_64 rng(seed);
  if (n > 1) {
    std::bernoulli_distribution coin(static_cast<double>(d) / (n - 1));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
  }
  for (int u = 0; u < n; ++u) {
    while (g.degree(u) < d) {
      auto options = (g.vertices() - g.neighbors(u)).without(u).to_vector();
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      g.add_edge(u, options[pick(rng)]);
    }
  }
  return g;
}

/// Like random_min_degree_graph, then deletes random edges at a minimum-degree
/// vertex until δ equals d exactly.
inline auto random_exact_min_degree_graph(int n, int d, std::uint64_t seed) -> Graph {
  Graph g = random_min_degree_graph(n, d, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  while (true) {
    int v = 0;
    for (int u = 1; u < n; ++u)
      if (g.degree(u) < g.degree(v)) v = u;
    if (g.degree(v) <= d) return g;
    // Every neighbour has degree >= deg(v) > d, so any edge at v can go.
    auto options = g.neighbors(v).to_vector();
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    g.remove_edge(v, options[pick(rng)]);
  }
}

/// complete(n), empty(n), path(n), cycle(n), complete_bipartite(a, b), sharpness(n, k).
inline auto named_family(std::string_view name, const std::vector<int>& params) -> Graph {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("family '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "complete") {
    need(1);
    Graph g(params[0]);
    for (int u = 0; u < params[0]; ++u)
      for (int v = u + 1; v < params[0]; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "empty") {
    need(1);
    return Graph(params[0]);
  }
  if (name == "path") {
    need(1);
    Graph g(params[0]);
    for (int v = 1; v < params[0]; ++v) g.add_edge(v - 1, v);
    return g;
  }
  if (name == "cycle") {
    need(1);
    if (params[0] < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g(params[0]);
    for (int v = 0; v < params[0]; ++v) g.add_edge(v, (v + 1) % params[0]);
    return g;
  }
  if (name == "complete_bipartite") {
    need(2);
    Graph g(params[0] + params[1]);
    for (int u = 0; u < params[0]; ++u)
      for (int v = params[0]; v < params[0] + params[1]; ++v) g.add_edge(u, v);
    return g;
  }
  if (name == "sharpness") {
    need(2);
    return sharpness_graph(params[0], params[1]).graph;
  }
  throw InputError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace knit
