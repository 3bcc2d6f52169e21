#pragma once

/**
 * Constructive versions of the extremal arguments for minimum-degree
 * knittedness: shrinking a terminal tree through a high-degree outside
 * vertex, swapping an outside vertex into a branch (vertex exchange), and a
 * local search over partial knits ordered by
 *   (component excess, |C|, -|A ∪ A_1 ∪ B ∪ B_1|)
 * which either reaches a knit or stops in a state no move improves.
 */

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "knit/errors.hpp"
#include "knit/graph.hpp"
#include "knit/knit_solver.hpp"
#include "knit/terminal_tree.hpp"

namespace knit {

// ---------------------------------------------------------------------------
// Partial knits

/// Disjoint branches C_1..C_t with S_i ⊆ C_i; a branch may induce several
/// components. Component lists are cached and refreshed on every update.
class PartialKnit {
 public:
  PartialKnit() = default;
  PartialKnit(const Graph& g, std::vector<VertexSet> branches) : branches_(std::move(branches)) {
    comps_.reserve(branches_.size());
    for (auto b : branches_) comps_.push_back(knit::components(g, b));
  }

  auto block_count() const -> int { return static_cast<int>(branches_.size()); }
  auto branch(int i) const -> VertexSet { return branches_[i]; }
  auto branches() const -> const std::vector<VertexSet>& { return branches_; }
  auto components(int i) const -> const std::vector<VertexSet>& { return comps_[i]; }

  auto set_branch(const Graph& g, int i, VertexSet b) -> void {
    branches_[i] = b;
    comps_[i] = knit::components(g, b);
  }

  auto covered() const -> VertexSet {
    VertexSet out;
    for (auto b : branches_) out |= b;
    return out;
  }
  auto size() const -> int { return covered().size(); }

  /// Sum over branches of (components - 1).
  auto component_excess() const -> int {
    int excess = 0;
    for (const auto& c : comps_) excess += std::max(0, static_cast<int>(c.size()) - 1);
    return excess;
  }

  auto is_knit() const -> bool {
    return std::all_of(comps_.begin(), comps_.end(), [](const auto& c) { return c.size() == 1; });
  }

  auto to_knit() const -> Knit { return Knit{branches_}; }

 private:
  std::vector<VertexSet> branches_;
  std::vector<std::vector<VertexSet>> comps_;
};

/// Disjoint, S_i ⊆ C_i, and |C| < n.
inline auto is_partial_knit(const Graph& g, const KnitInstance& inst, const PartialKnit& pk) -> bool {
  if (pk.block_count() != inst.t()) return false;
  VertexSet seen;
  for (int i = 0; i < pk.block_count(); ++i) {
    if (pk.branch(i).intersects(seen) || !inst.block(i).subset_of(pk.branch(i))) return false;
    seen |= pk.branch(i);
  }
  return seen.subset_of(g.vertices()) && seen.size() < g.order();
}

struct ProofState {
  PartialKnit pk;
  int block = -1;  ///< index of the split block
  int x = -1;
  int y = -1;
  VertexSet a;   ///< N(x) - C
  VertexSet b;   ///< N(y) - C
  VertexSet a1;  ///< N(A) - (A ∪ C)
  VertexSet b1;  ///< N(B) - (B ∪ C)

  auto frontier() const -> VertexSet { return a | a1 | b | b1; }
};

/// Picks the least block whose terminals span several components, and in it
/// the lexicographically least terminal pair (x, y) lying in different ones.
inline auto frontier_state(const Graph& g, const PartialKnit& pk, const KnitInstance& inst) -> ProofState {
  for (int i = 0; i < pk.block_count(); ++i) {
    const VertexSet s = inst.block(i);
    const auto& comps = pk.components(i);
    auto comp_of = [&](int v) {
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (comps[c].contains(v)) return static_cast<int>(c);
      return -1;
    };
    for (int x : s) {
      for (int y : s - VertexSet::prefix(x + 1)) {
        if (comp_of(x) == comp_of(y)) continue;
        ProofState st;
        st.pk = pk;
        st.block = i;
        st.x = x;
        st.y = y;
        const VertexSet c = pk.covered();
        const VertexSet all = g.vertices();
        st.a = g.neighbors(x) - c;
        st.b = g.neighbors(y) - c;
        st.a1 = open_neighborhood(g, st.a, all) - c;
        st.b1 = open_neighborhood(g, st.b, all) - c;
        return st;
      }
    }
  }
  throw PreconditionError("frontier_state: no block is split across components");
}

// ---------------------------------------------------------------------------
// Lemma-level operations

/// Given a terminal tree F with |terminals| >= 2 and an outside vertex u with
/// at least |terminals| + 2 neighbours on F, returns a strictly smaller
/// terminal tree through u inside g[V(F) ∪ {u}].
///
/// Grows a breadth-first tree from u over u's edges into F plus the edges of
/// F, then prunes non-terminal leaves. Each branch at u is a connected piece
/// of F, and since every vertex of F lies between two terminals no single
/// piece can hold them all; u keeps degree >= 2. The tree has >= d(u,F)
/// leaves of which at most |terminals| survive, so at least two are cut.
inline auto subtree_shrink(const Graph& g, const TerminalTree& f, int u) -> TerminalTree {
  g.check_vertex(u);
  if (!f.is_valid() || !f.embedded_in(g)) throw PreconditionError("subtree_shrink: input is not a terminal tree of g");
  if (f.vertices().contains(u)) throw PreconditionError("subtree_shrink: u lies on the tree");
  const int s = f.terminals().size();
  if (s < 2) throw PreconditionError("subtree_shrink: needs at least two terminals");
  const VertexSet touch = g.neighbors(u) & f.vertices();
  if (touch.size() < s + 2)
    throw PreconditionError("subtree_shrink: d(u,F) = " + std::to_string(touch.size()) + " < |S'| + 2 = " +
                            std::to_string(s + 2));

  TerminalTree out(f.terminals());
  out.add_vertex(u);
  VertexSet seen = touch.with(u);
  std::vector<int> queue;
  for (int w : touch) {
    out.add_edge(u, w);
    queue.push_back(w);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : f.tree_neighbors(v) - seen) {
      out.add_edge(v, w);
      seen.insert(w);
      queue.push_back(w);
    }
  }
  out.prune_nonterminal_leaves();
  if (!out.vertices().contains(u) || out.size() >= f.size() || !out.is_valid())
    throw std::logic_error("subtree_shrink: construction failed its own postcondition");
  return out;
}

struct DegreeCapViolation {
  int branch = -1;
  VertexSet component;
  int degree = 0;  ///< d(u, D)
  int cap = 0;     ///< |S_i ∩ D| + 1
};

/// Every component D of every branch with d(u, D) > |S_i ∩ D| + 1.
inline auto degree_cap_check(const Graph& g, const PartialKnit& pk, const KnitInstance& inst, int u)
    -> std::vector<DegreeCapViolation> {
  g.check_vertex(u);
  if (pk.covered().contains(u)) throw PreconditionError("degree_cap_check: u lies inside the knit");
  std::vector<DegreeCapViolation> out;
  for (int i = 0; i < pk.block_count(); ++i) {
    for (VertexSet d : pk.components(i)) {
      const int deg = neighbors_in(g, u, d).size();
      const int cap = (inst.block(i) & d).size() + 1;
      if (deg > cap) out.push_back({i, d, deg, cap});
    }
  }
  return out;
}

namespace detail {

// Order of the path between the two leaves of a path-shaped tree, from `from`.
inline auto path_order(const TerminalTree& tree, int from) -> std::vector<int> {
  std::vector<int> order{from};
  int prev = -1, cur = from;
  while (true) {
    VertexSet next = tree.tree_neighbors(cur);
    if (prev >= 0) next.erase(prev);
    if (next.empty()) break;
    prev = cur;
    cur = next.front();
    order.push_back(cur);
  }
  return order;
}

// Leaf path P_x in walk order from the leaf x, and the vertex x' where the
// walk stopped (first vertex that is a terminal or has tree degree >= 3).
inline auto leaf_path(const TerminalTree& tree, int x) -> std::pair<std::vector<int>, int> {
  std::vector<int> path{x};
  int prev = -1, cur = x;
  while (true) {
    VertexSet next = tree.tree_neighbors(cur);
    if (prev >= 0) next.erase(prev);
    if (next.empty()) return {path, -1};
    const int w = next.front();
    if (tree.terminals().contains(w) || tree.tree_degree(w) >= 3) return {path, w};
    path.push_back(w);
    prev = cur;
    cur = w;
  }
}

inline auto exchange_on_tree_rec(TerminalTree tree, VertexSet nbrs) -> std::optional<int> {
  const VertexSet s = tree.terminals();
  nbrs &= tree.vertices();
  if (s.size() < 2 || nbrs.size() < s.size() + 1) return std::nullopt;

  if (s.size() == 2) {
    // Both terminals are the leaves of a path; any neighbour strictly between
    // u's first and last neighbour on it separates nothing from u.
    auto order = path_order(tree, s.front());
    std::vector<int> hits;
    for (int v : order)
      if (nbrs.contains(v)) hits.push_back(v);
    if (hits.size() < 3 || s.contains(hits[1])) return std::nullopt;
    return hits[1];
  }

  const VertexSet leaves = tree.leaves();
  if (!leaves.subset_of(s)) return std::nullopt;

  std::vector<std::pair<std::vector<int>, int>> paths;
  for (int x : leaves) paths.push_back(leaf_path(tree, x));

  // Two neighbours on one leaf path: drop the second one from the leaf.
  for (const auto& [path, stop] : paths) {
    int seen = 0;
    for (int v : path) {
      if (!nbrs.contains(v)) continue;
      if (++seen == 2) return v;
    }
  }

  auto without_path = [&](const std::vector<int>& path) {
    TerminalTree rest = tree;
    for (int v : path) rest.remove_vertex(v);
    return rest;
  };

  // Exactly one neighbour on some P_x: recurse on F - P_x with S - x.
  for (const auto& [path, stop] : paths) {
    int hit = 0;
    for (int v : path) hit += nbrs.contains(v) ? 1 : 0;
    if (hit != 1 || stop < 0) continue;
    TerminalTree rest = without_path(path);
    rest.set_terminals(s.without(path.front()));
    return exchange_on_tree_rec(std::move(rest), nbrs);
  }

  // No neighbours on any leaf path: replace leaf x by its attachment x'.
  const auto& [path, stop] = paths.front();
  if (stop < 0) return std::nullopt;
  TerminalTree rest = without_path(path);
  rest.set_terminals(s.without(path.front()).with(stop));
  return exchange_on_tree_rec(std::move(rest), nbrs);
}

inline auto swap_keeps_connected(const Graph& g, VertexSet branch, int v, int u) -> bool {
  return is_connected(g, branch.without(v).with(u));
}

}  // namespace detail

/// Vertex exchange on a terminal tree by induction on |terminals| and |tree|.
/// Requires the tree's leaves to be terminals, at least two terminals, and
/// d(u, tree) >= |terminals| + 1. The returned v is a non-terminal neighbour
/// of u such that tree - v + u stays connected.
inline auto exchange_on_tree(const Graph& g, const TerminalTree& tree, int u) -> std::optional<int> {
  g.check_vertex(u);
  if (tree.vertices().contains(u) || !tree.is_valid()) return std::nullopt;
  return detail::exchange_on_tree_rec(tree, g.neighbors(u));
}

/// A non-terminal v ∈ N(u) ∩ branch with branch - v + u connected, for a
/// connected branch and d(u, branch) >= |terminals| + 1. Runs the tree
/// induction on the terminal spanning tree of the branch; branches with
/// removable non-terminals fall back to scanning the candidates in order.
inline auto vertex_exchange(const Graph& g, VertexSet branch, VertexSet terminals, int u) -> std::optional<int> {
  if (u < 0 || u >= g.order() || branch.contains(u)) return std::nullopt;
  if (!branch.subset_of(g.vertices()) || !terminals.subset_of(branch) || terminals.size() < 2) return std::nullopt;
  const VertexSet touch = neighbors_in(g, u, branch);
  if (touch.size() < terminals.size() + 1 || !is_connected(g, branch)) return std::nullopt;

  const TerminalTree tree = terminal_spanning_tree(g, branch, terminals);
  if ((touch & tree.vertices()).size() >= terminals.size() + 1) {
    if (auto v = exchange_on_tree(g, tree, u); v && detail::swap_keeps_connected(g, branch, *v, u)) return v;
  }
  for (int v : touch - terminals)
    if (detail::swap_keeps_connected(g, branch, v, u)) return v;
  return std::nullopt;
}

/// For a branch with several components: swaps u in for some v so that the
/// branch has strictly fewer components. Returns v and the rewritten branch.
inline auto exchange_multi(const Graph& g, VertexSet branch, VertexSet terminals, int u)
    -> std::optional<std::pair<int, VertexSet>> {
  if (u < 0 || u >= g.order() || branch.contains(u) || !terminals.subset_of(branch)) return std::nullopt;
  if (neighbors_in(g, u, branch).size() < terminals.size() + 1) return std::nullopt;
  const auto comps = components(g, branch);
  if (comps.size() < 2) return std::nullopt;

  for (VertexSet d : comps) {
    const VertexSet sd = terminals & d;
    const VertexSet touch = neighbors_in(g, u, d);
    if (touch.size() < sd.size() + 1) continue;
    std::vector<int> candidates;
    if (sd.size() >= 2) {
      if (auto v = vertex_exchange(g, d, sd, u)) candidates.push_back(*v);
    }
    for (int v : touch - sd)
      if (detail::swap_keeps_connected(g, d, v, u)) candidates.push_back(v);
    for (int v : candidates) {
      const VertexSet rewritten = branch.without(v).with(u);
      if (component_count(g, rewritten) < static_cast<int>(comps.size())) return std::pair{v, rewritten};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Local search

struct Objective {
  int component_excess = 0;
  int size = 0;
  int frontier = 0;

  auto key() const { return std::tuple(component_excess, size, -frontier); }
  friend auto operator<(const Objective& a, const Objective& b) -> bool { return a.key() < b.key(); }
  friend auto operator==(const Objective&, const Objective&) -> bool = default;
};

inline auto objective_of(const Graph& g, const PartialKnit& pk, const KnitInstance& inst) -> Objective {
  Objective o{pk.component_excess(), pk.size(), 0};
  if (!pk.is_knit()) {
    bool split = false;
    for (int i = 0; i < pk.block_count() && !split; ++i) {
      int with_terminals = 0;
      for (VertexSet c : pk.components(i)) with_terminals += c.intersects(inst.block(i)) ? 1 : 0;
      split = with_terminals >= 2;
    }
    if (split) o.frontier = frontier_state(g, pk, inst).frontier().size();
  }
  return o;
}

enum class MoveKind { PathAugment, ExchangeMulti, DoubleSwap, Shrink, SubtreeShrink, Exchange };

inline auto to_string(MoveKind k) -> std::string {
  switch (k) {
    case MoveKind::PathAugment: return "path_augment";
    case MoveKind::ExchangeMulti: return "exchange_multi";
    case MoveKind::DoubleSwap: return "double_swap";
    case MoveKind::Shrink: return "shrink";
    case MoveKind::SubtreeShrink: return "subtree_shrink";
    case MoveKind::Exchange: return "exchange";
  }
  return "unknown";
}

struct MoveRecord {
  MoveKind kind{};
  int branch = -1;
  Objective before;
  Objective after;
};

/// One trace line: move kind, affected branch, objective before and after.
inline auto format_move(const MoveRecord& m) -> std::string {
  std::ostringstream out;
  out << "move=" << to_string(m.kind) << " branch=" << m.branch << " objective=(" << m.before.component_excess << ','
      << m.before.size << ',' << -m.before.frontier << ")->(" << m.after.component_excess << ',' << m.after.size << ','
      << -m.after.frontier << ')';
  return out.str();
}

struct ConstructiveOptions {
  int budget = 0;  ///< move budget; 0 means 10 * n
  /// Longest x-y connection through G - C, in edges.
  int max_path_length = 6;
};

struct ConstructiveResult {
  std::variant<Knit, ProofState> outcome;
  std::vector<MoveRecord> trace;

  auto solved() const -> bool { return std::holds_alternative<Knit>(outcome); }
  auto knit() const -> const Knit& { return std::get<Knit>(outcome); }
  auto stuck() const -> const ProofState& { return std::get<ProofState>(outcome); }
};

namespace detail {

// Shortest path through `outside` from the component holding `from` in
// branch i to any other component of that branch, with at most
// max_interior vertices. Returns the interior vertices.
inline auto augmenting_path(const Graph& g, const PartialKnit& pk, int i, int from, VertexSet outside,
                            int max_interior) -> std::optional<VertexSet> {
  const auto& comps = pk.components(i);
  VertexSet source, targets;
  for (VertexSet c : comps) {
    if (c.contains(from))
      source = c;
    else
      targets |= c;
  }
  if (source.empty() || targets.empty()) return std::nullopt;

  std::vector<int> parent(kMaxVertices, -1);
  VertexSet frontier = open_neighborhood(g, source, outside);
  VertexSet seen = frontier;
  for (int depth = 1; depth <= max_interior && !frontier.empty(); ++depth) {
    for (int v : frontier) {
      if (!g.neighbors(v).intersects(targets)) continue;
      VertexSet path;
      for (int w = v; w >= 0; w = parent[w]) path.insert(w);
      return path;
    }
    VertexSet next;
    for (int v : frontier) {
      for (int w : (g.neighbors(v) & outside) - seen - next) {
        parent[w] = v;
        next.insert(w);
      }
    }
    seen |= next;
    frontier = next;
  }
  return std::nullopt;
}

class LocalSearch {
 public:
  LocalSearch(const KnitInstance& inst, ConstructiveOptions opts)
      : inst_(inst), g_(inst.graph), opts_(opts), pk_(g_, inst.partition.parts) {
    if (opts_.budget <= 0) opts_.budget = 10 * g_.order();
  }

  auto run() -> ConstructiveResult {
    ConstructiveResult result{Knit{}, {}};
    for (int moves = 0; !pk_.is_knit() && moves < opts_.budget; ++moves) {
      const Objective now = objective_of(g_, pk_, inst_);
      auto step = best_move(now);
      if (!step) break;
      const Objective after = objective_of(g_, step->pk, inst_);
      if (!(after < now)) throw std::logic_error("constructive_knit: accepted a non-improving move");
      result.trace.push_back({step->kind, step->branch, now, after});
      pk_ = std::move(step->pk);
    }
    if (!pk_.is_knit()) {
      // Budget ran out with only terminal-free pieces left over.
      PartialKnit trimmed = pk_;
      for (int i = 0; i < trimmed.block_count(); ++i) {
        VertexSet keep;
        for (VertexSet c : trimmed.components(i))
          if (c.intersects(inst_.block(i))) keep |= c;
        trimmed.set_branch(g_, i, keep);
      }
      if (trimmed.is_knit()) pk_ = std::move(trimmed);
    }
    if (pk_.is_knit()) {
      Knit k = pk_.to_knit();
      if (!verify_knit(inst_, k)) throw std::logic_error("constructive_knit: produced an invalid knit");
      result.outcome = std::move(k);
    } else {
      result.outcome = frontier_state(g_, pk_, inst_);
    }
    return result;
  }

 private:
  struct Step {
    MoveKind kind;
    int branch;
    PartialKnit pk;
  };

  auto outside(const PartialKnit& pk) const -> VertexSet { return g_.vertices() - pk.covered(); }

  auto acceptable(const PartialKnit& cand, const Objective& now) const -> bool {
    if (!cand.is_knit() && cand.size() >= g_.order()) return false;
    return objective_of(g_, cand, inst_) < now;
  }

  auto with_branch(const PartialKnit& pk, int i, VertexSet b) const -> PartialKnit {
    PartialKnit out = pk;
    out.set_branch(g_, i, b);
    return out;
  }

  auto lowest_split_terminal(const PartialKnit& pk, int i) const -> int {
    const VertexSet s = inst_.block(i);
    for (VertexSet c : pk.components(i))
      if (c.contains(s.front()) && !(s - c).empty()) return s.front();
    return -1;
  }

  // Joins the split terminals of block i through G - C when possible.
  auto try_augment(const PartialKnit& pk, int i) const -> std::optional<PartialKnit> {
    const int from = lowest_split_terminal(pk, i);
    if (from < 0) return std::nullopt;
    auto path = augmenting_path(g_, pk, i, from, outside(pk), opts_.max_path_length - 1);
    if (!path) return std::nullopt;
    return with_branch(pk, i, pk.branch(i) | *path);
  }

  auto best_move(const Objective& now) const -> std::optional<Step> {
    for (int i = 0; i < pk_.block_count(); ++i) {
      for (VertexSet c : pk_.components(i)) {
        if (c.intersects(inst_.block(i))) continue;
        auto cand = with_branch(pk_, i, pk_.branch(i) - c);
        if (acceptable(cand, now)) return Step{MoveKind::Shrink, i, std::move(cand)};
      }
    }
    const ProofState state = frontier_state(g_, pk_, inst_);
    const VertexSet out = outside(pk_);
    const int t = pk_.block_count();

    // (m1) path augmentation, split pair's block first.
    std::vector<int> order{state.block};
    for (int i = 0; i < t; ++i)
      if (i != state.block) order.push_back(i);
    for (int i : order) {
      if (auto cand = try_augment(pk_, i); cand && acceptable(*cand, now))
        return Step{MoveKind::PathAugment, i, std::move(*cand)};
    }

    // (m2) multi-component exchange.
    for (int u : out) {
      for (int i = 0; i < t; ++i) {
        if (pk_.components(i).size() < 2) continue;
        if (auto r = exchange_multi(g_, pk_.branch(i), inst_.block(i), u)) {
          auto cand = with_branch(pk_, i, r->second);
          if (acceptable(cand, now)) return Step{MoveKind::ExchangeMulti, i, std::move(cand)};
        }
      }
    }

    // (m3) free a branch vertex w by swapping in an outside neighbour, then
    // route the split pair through w.
    for (int j = 0; j < t; ++j) {
      const VertexSet bj = pk_.branch(j);
      const int comps_j = static_cast<int>(pk_.components(j).size());
      for (int w : bj - inst_.block(j)) {
        for (int u : g_.neighbors(w) & out) {
          const VertexSet swapped = bj.without(w).with(u);
          if (component_count(g_, swapped) > comps_j) continue;
          PartialKnit mid = with_branch(pk_, j, swapped);
          if (auto cand = try_augment(mid, state.block); cand && acceptable(*cand, now))
            return Step{MoveKind::DoubleSwap, state.block, std::move(*cand)};
        }
      }
    }

    // Shrink: drop non-terminals whose removal keeps the component count.
    for (int i = 0; i < t; ++i) {
      const VertexSet bi = pk_.branch(i);
      const int comps_i = static_cast<int>(pk_.components(i).size());
      for (int v : bi - inst_.block(i)) {
        if (component_count(g_, bi.without(v)) > comps_i) continue;
        auto cand = with_branch(pk_, i, bi.without(v));
        if (acceptable(cand, now)) return Step{MoveKind::Shrink, i, std::move(cand)};
      }
    }

    // Shrink a component through an outside vertex of high degree into it.
    for (int u : out) {
      for (int i = 0; i < t; ++i) {
        for (VertexSet d : pk_.components(i)) {
          const VertexSet sd = inst_.block(i) & d;
          if (sd.size() < 2 || neighbors_in(g_, u, d).size() < sd.size() + 2) continue;
          const TerminalTree f = terminal_spanning_tree(g_, d, sd);
          if (f.vertices() != d) continue;
          const TerminalTree f0 = subtree_shrink(g_, f, u);
          auto cand = with_branch(pk_, i, (pk_.branch(i) - d) | f0.vertices());
          if (acceptable(cand, now)) return Step{MoveKind::SubtreeShrink, i, std::move(cand)};
        }
      }
    }

    // (m2) single-component exchange, kept only when the frontier grows.
    for (int u : out) {
      for (int i = 0; i < t; ++i) {
        const VertexSet bi = pk_.branch(i);
        const int comps_i = static_cast<int>(pk_.components(i).size());
        std::vector<int> candidates;
        if (comps_i == 1) {
          if (auto v = vertex_exchange(g_, bi, inst_.block(i), u)) candidates.push_back(*v);
        }
        for (int v : (g_.neighbors(u) & bi) - inst_.block(i)) candidates.push_back(v);
        for (int v : candidates) {
          const VertexSet swapped = bi.without(v).with(u);
          if (component_count(g_, swapped) > comps_i) continue;
          auto cand = with_branch(pk_, i, swapped);
          if (acceptable(cand, now)) return Step{MoveKind::Exchange, i, std::move(cand)};
        }
      }
    }
    return std::nullopt;
  }

  const KnitInstance& inst_;
  const Graph& g_;
  ConstructiveOptions opts_;
  PartialKnit pk_;
};

}  // namespace detail

/// Proof-guided local search starting from C_i = S_i. Returns a verified
/// knit, or the state where no move improves (or the budget ran out).
inline auto constructive_knit(const KnitInstance& inst, ConstructiveOptions opts = {}) -> ConstructiveResult {
  inst.validate();
  return detail::LocalSearch(inst, opts).run();
}

}  // namespace knit
