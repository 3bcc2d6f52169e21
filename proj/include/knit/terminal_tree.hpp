#pragma once

/**
 * Trees inside a graph whose leaves all belong to a designated terminal set.
 */

#include <array>
#include <utility>
#include <vector>

#include "knit/errors.hpp"
#include "knit/graph.hpp"
#include "knit/vertex_set.hpp"

namespace knit {

class TerminalTree {
 public:
  TerminalTree() = default;
  explicit TerminalTree(VertexSet terminals) : terminals_(terminals) {}

  auto vertices() const -> VertexSet { return vertices_; }
  auto terminals() const -> VertexSet { return terminals_; }
  auto size() const -> int { return vertices_.size(); }

  auto tree_neighbors(int v) const -> VertexSet { return adj_[v]; }
  auto tree_degree(int v) const -> int { return adj_[v].size(); }

  auto add_vertex(int v) -> void { vertices_.insert(v); }
  auto add_edge(int u, int v) -> void {
    vertices_.insert(u);
    vertices_.insert(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  auto remove_vertex(int v) -> void {
    for (int w : adj_[v]) adj_[w].erase(v);
    adj_[v] = {};
    vertices_.erase(v);
  }
  auto set_terminals(VertexSet terminals) -> void { terminals_ = terminals; }

  /// Vertices of tree degree at most one (a lone vertex counts as a leaf).
  auto leaves() const -> VertexSet {
    VertexSet out;
    for (int v : vertices_)
      if (adj_[v].size() <= 1) out.insert(v);
    return out;
  }

  auto edge_count() const -> int {
    int twice = 0;
    for (int v : vertices_) twice += adj_[v].size();
    return twice / 2;
  }

  auto edges() const -> std::vector<std::pair<int, int>> {
    std::vector<std::pair<int, int>> out;
    for (int u : vertices_)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Parent of each vertex when rooted at the smallest vertex; -1 for the root
  /// and for non-members.
  auto parent_map() const -> std::vector<int> {
    std::vector<int> parent(kMaxVertices, -1);
    if (vertices_.empty()) return parent;
    VertexSet seen = VertexSet::single(vertices_.front());
    std::vector<int> stack{vertices_.front()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v] - seen) {
        parent[w] = v;
        seen.insert(w);
        stack.push_back(w);
      }
    }
    return parent;
  }

  /// Vertices reachable from v along tree edges inside `within`.
  auto tree_reach(int v, VertexSet within) const -> VertexSet {
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (int w : frontier) next |= adj_[w];
      next = (next & within) - seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  /// Acyclic, connected, and spanning exactly `vertices()`.
  auto is_tree() const -> bool {
    if (vertices_.empty()) return false;
    return edge_count() == size() - 1 && tree_reach(vertices_.front(), vertices_) == vertices_;
  }

  /// A tree containing its terminals whose every leaf is a terminal. A single
  /// terminal vertex qualifies.
  auto is_valid() const -> bool {
    return is_tree() && terminals_.subset_of(vertices_) && leaves().subset_of(terminals_);
  }

  /// Every tree edge is an edge of g.
  auto embedded_in(const Graph& g) const -> bool {
    for (auto [u, v] : edges())
      if (!g.adjacent(u, v)) return false;
    return true;
  }

  /// Drops non-terminal leaves until none remain.
  auto prune_nonterminal_leaves() -> void {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v : leaves() - terminals_) {
        if (size() == 1) return;
        remove_vertex(v);
        changed = true;
      }
    }
  }

 private:
  VertexSet vertices_;
  VertexSet terminals_;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Spanning tree of g[c] grown breadth-first from the lowest terminal, then cut
/// back so every leaf is a terminal. The result spans some c' with
/// terminals ⊆ c' ⊆ c.
inline auto terminal_spanning_tree(const Graph& g, VertexSet c, VertexSet terminals) -> TerminalTree {
  if (terminals.empty()) throw PreconditionError("terminal_spanning_tree: empty terminal set");
  if (!terminals.subset_of(c)) throw PreconditionError("terminal_spanning_tree: terminals not inside c");
  if (!c.subset_of(g.vertices())) throw InputError("terminal_spanning_tree: vertex set exceeds graph order");
  if (!is_connected(g, c)) throw PreconditionError("terminal_spanning_tree: c does not induce a connected subgraph");

  TerminalTree tree(terminals);
  int root = terminals.front();
  tree.add_vertex(root);
  VertexSet seen = VertexSet::single(root);
  std::vector<int> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : (g.neighbors(v) & c) - seen) {
      tree.add_edge(v, w);
      seen.insert(w);
      queue.push_back(w);
    }
  }
  tree.prune_nonterminal_leaves();
  return tree;
}

}  // namespace knit
