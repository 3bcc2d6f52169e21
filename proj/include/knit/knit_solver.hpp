#pragma once

/**
 * Exact decision procedure for knits: given a graph and a partition S_1..S_t
 * of a terminal set, find pairwise disjoint vertex sets C_1..C_t with
 * S_i ⊆ C_i and each g[C_i] connected, or prove none exist.
 *
 * The search assigns non-terminal vertices (ascending) to "unused" or to a
 * block, deepening on the number of extra vertices. A node is cut when some
 * block's members cannot be joined through its own vertices plus the still
 * undecided ones, or when the per-block distance bound exceeds the remaining
 * budget. The first knit found therefore has minimum total size, and among
 * those the lexicographically smallest assignment vector (unused < block 1 <
 * ... < block t, vertices in ascending order).
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "knit/enumerate.hpp"
#include "knit/errors.hpp"
#include "knit/graph.hpp"

namespace knit {

struct KnitInstance {
  Graph graph;
  SetPartition partition;

  auto terminals() const -> VertexSet { return partition.ground(); }
  auto k() const -> int { return terminals().size(); }
  auto t() const -> int { return partition.block_count(); }
  auto block(int i) const -> VertexSet { return partition.parts[i]; }

  /// Throws InputError unless the blocks are nonempty, disjoint, and inside V(G).
  auto validate() const -> void {
    if (partition.parts.empty()) throw InputError("instance: partition has no blocks");
    if (!partition.is_valid()) throw InputError("instance: blocks must be nonempty and pairwise disjoint");
    if (!terminals().subset_of(graph.vertices())) throw InputError("instance: terminal outside the graph");
  }
};

inline auto make_instance(Graph g, std::vector<VertexSet> blocks) -> KnitInstance {
  KnitInstance inst{std::move(g), SetPartition{std::move(blocks)}};
  inst.validate();
  return inst;
}

struct Knit {
  std::vector<VertexSet> branches;

  auto covered() const -> VertexSet {
    VertexSet out;
    for (auto b : branches) out |= b;
    return out;
  }
  auto size() const -> int { return covered().size(); }
  friend auto operator==(const Knit&, const Knit&) -> bool = default;
};

/// A (terminal set, partition) pair; used for failure witnesses.
struct Witness {
  VertexSet terminals;
  SetPartition partition;
};

inline auto verify_knit(const Graph& g, std::span<const VertexSet> blocks, const Knit& cand) -> bool {
  if (cand.branches.size() != blocks.size())
    throw InputError("verify_knit: expected " + std::to_string(blocks.size()) + " branches, got " +
                     std::to_string(cand.branches.size()));
  VertexSet seen;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    VertexSet c = cand.branches[i];
    if (!c.subset_of(g.vertices())) return false;
    if (c.intersects(seen)) return false;
    if (!blocks[i].subset_of(c)) return false;
    if (!is_connected(g, c)) return false;
    seen |= c;
  }
  return true;
}

inline auto verify_knit(const KnitInstance& inst, const Knit& cand) -> bool {
  return verify_knit(inst.graph, inst.partition.parts, cand);
}

namespace detail {

class KnitSearch {
 public:
  KnitSearch(const Graph& g, std::span<const VertexSet> blocks)
      : g_(g), members_(blocks.begin(), blocks.end()) {
    VertexSet terminals;
    for (auto b : blocks) terminals |= b;
    for (int v : g.vertices() - terminals) order_.push_back(v);
    suffix_.assign(order_.size() + 1, VertexSet{});
    for (int i = static_cast<int>(order_.size()) - 1; i >= 0; --i) suffix_[i] = suffix_[i + 1].with(order_[i]);
  }

  auto run() -> std::optional<Knit> {
    const int free_count = static_cast<int>(order_.size());
    if (!feasible(0, free_count)) return std::nullopt;
    for (int budget = 0; budget <= free_count; ++budget)
      if (dfs(0, budget)) return Knit{members_};
    return std::nullopt;
  }

  auto nodes() const -> std::uint64_t { return nodes_; }

 private:
  // Lower bound on extra vertices, or -1 when some block is cut off.
  auto extra_needed(int idx) const -> int {
    const VertexSet undecided = suffix_[idx];
    int total = 0;
    for (VertexSet m : members_) {
      VertexSet first = reach(g_, VertexSet::single(m.front()), m);
      if (first == m) continue;
      const VertexSet avail = m | undecided;
      VertexSet seen = first, frontier = first;
      int layers = 0;
      while (true) {
        VertexSet next;
        for (int v : frontier) next |= g_.neighbors(v);
        next = (next & avail) - seen;
        if (next.empty()) return -1;
        if (next.intersects(m)) break;
        ++layers;
        seen |= next;
        frontier = next;
      }
      // A later component may still be unreachable even if the nearest one is not.
      if (!m.subset_of(reach(g_, first, avail))) return -1;
      total += layers;
    }
    return total;
  }

  auto feasible(int idx, int budget) const -> bool {
    int need = extra_needed(idx);
    return need >= 0 && need <= budget;
  }

  auto all_connected() const -> bool {
    for (VertexSet m : members_)
      if (!is_connected(g_, m)) return false;
    return true;
  }

  auto dfs(int idx, int budget) -> bool {
    ++nodes_;
    if (!feasible(idx, budget)) return false;
    if (all_connected()) return true;
    if (idx == static_cast<int>(order_.size()) || budget == 0) return false;
    const int v = order_[idx];
    if (dfs(idx + 1, budget)) return true;
    for (auto& m : members_) {
      m.insert(v);
      if (dfs(idx + 1, budget - 1)) return true;
      m.erase(v);
    }
    return false;
  }

  const Graph& g_;
  std::vector<VertexSet> members_;
  std::vector<int> order_;
  std::vector<VertexSet> suffix_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Minimum-size knit for the given blocks, or nullopt when none exists.
inline auto solve_knit(const Graph& g, std::span<const VertexSet> blocks) -> std::optional<Knit> {
  return detail::KnitSearch(g, blocks).run();
}

inline auto solve_knit(const KnitInstance& inst) -> std::optional<Knit> {
  inst.validate();
  return solve_knit(inst.graph, inst.partition.parts);
}

/// Smallest integer d with d >= (n+k)/2 - 1.
constexpr auto min_degree_threshold(int n, int k) -> int {
  const int twice = n + k - 2;
  return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2);
}

// ---------------------------------------------------------------------------
// Predicate sweeps

struct SweepOptions {
  int jobs = 1;
};

struct SweepResult {
  bool ok = true;
  /// Instances solved; on failure, the 1-based ordinal of the witness in
  /// enumeration order (independent of `jobs`).
  std::uint64_t instances = 0;
  std::optional<Witness> witness;
};

struct IgnoreKnit {
  auto operator()(std::span<const VertexSet>, const Knit&) const -> void {}
};

/// Runs check(i) for i in [0, count) on `jobs` threads and returns the
/// smallest i with check(i) == false. Indices above a known failure are skipped.
template <class Check>
auto first_failure(std::size_t count, int jobs, Check&& check) -> std::optional<std::size_t> {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failed{kNone};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || i > failed.load()) return;
      if (!check(i)) {
        std::size_t cur = failed.load();
        while (i < cur && !failed.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failed.load() == kNone) return std::nullopt;
  return failed.load();
}

/// Decides (k,m)-knit by solving every instance. `on_knit(blocks, knit)` sees
/// every certificate; with jobs > 1 it is called concurrently.
template <class OnKnit = IgnoreKnit>
auto sweep_km_knit(const Graph& g, int k, int m, SweepOptions opts = {}, OnKnit&& on_knit = {}) -> SweepResult {
  if (k < 1 || k > g.order()) throw InputError("k must satisfy 1 <= k <= n");
  if (m < 1 || m > k) throw InputError("m must satisfy 1 <= m <= k");

  const auto subsets = enumerate_ksubsets(g.vertices(), k);
  const std::uint64_t per_subset = partition_count(k, m);
  std::vector<std::optional<SetPartition>> failures(subsets.size());
  std::vector<std::uint64_t> failure_rank(subsets.size(), 0);

  auto fail_at = first_failure(subsets.size(), opts.jobs, [&](std::size_t i) {
    bool ok = true;
    std::uint64_t rank = 0;
    for_each_partition(subsets[i], m, [&](std::span<const VertexSet> blocks) {
      ++rank;
      auto knit = solve_knit(g, blocks);
      if (!knit) {
        failures[i] = SetPartition{{blocks.begin(), blocks.end()}};
        failure_rank[i] = rank;
        ok = false;
        return false;
      }
      on_knit(blocks, *knit);
      return true;
    });
    return ok;
  });

  SweepResult result;
  if (!fail_at) {
    result.instances = subsets.size() * per_subset;
    return result;
  }
  result.ok = false;
  result.instances = *fail_at * per_subset + failure_rank[*fail_at];
  result.witness = Witness{subsets[*fail_at], *failures[*fail_at]};
  return result;
}

/// Sweeps an explicit instance list; the witness is the first failing entry.
template <class OnKnit = IgnoreKnit>
auto sweep_instances(const Graph& g, std::span<const SetPartition> instances, SweepOptions opts = {},
                     OnKnit&& on_knit = {}) -> SweepResult {
  auto fail_at = first_failure(instances.size(), opts.jobs, [&](std::size_t i) {
    auto knit = solve_knit(g, instances[i].parts);
    if (!knit) return false;
    on_knit(std::span<const VertexSet>(instances[i].parts), *knit);
    return true;
  });
  SweepResult result;
  if (!fail_at) {
    result.instances = instances.size();
    return result;
  }
  result.ok = false;
  result.instances = *fail_at + 1;
  result.witness = Witness{instances[*fail_at].ground(), instances[*fail_at]};
  return result;
}

/// `count` instances: a uniform k-subset of `universe` and a uniform set
/// partition of it (drawn from the full restricted-growth list).
inline auto sample_instances(VertexSet universe, int k, std::size_t count, std::uint64_t seed)
    -> std::vector<SetPartition> {
  if (k < 1 || k > universe.size()) throw InputError("sample_instances: k out of range");
  std::vector<SetPartition> shapes = enumerate_partitions(VertexSet::prefix(k), 1);
  const auto pool = universe.to_vector();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_shape(0, shapes.size() - 1);
  std::vector<SetPartition> out;
  out.reserve(count);
  std::vector<int> chosen(k);
  for (std::size_t c = 0; c < count; ++c) {
    // Partial Fisher-Yates for a uniform ordered k-subset, then sort.
    auto deck = pool;
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, deck.size() - 1);
      std::swap(deck[i], deck[pick(rng)]);
      chosen[i] = deck[i];
    }
    std::sort(chosen.begin(), chosen.end());
    const auto& shape = shapes[pick_shape(rng)];
    SetPartition p;
    for (VertexSet block : shape.parts) {
      VertexSet mapped;
      for (int idx : block) mapped.insert(chosen[idx]);
      p.parts.push_back(mapped);
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline auto is_km_knit(const Graph& g, int k, int m, SweepOptions opts = {}) -> bool {
  return sweep_km_knit(g, k, m, opts).ok;
}

inline auto is_k_knitted(const Graph& g, int k, SweepOptions opts = {}) -> bool {
  return sweep_km_knit(g, k, 1, opts).ok;
}

/// Calls f(std::span<const VertexSet>) for every perfect matching of `s`
/// (|s| even), pairs ordered by their smaller vertex. Stops when f returns false.
template <class F>
auto for_each_pairing(VertexSet s, F&& f) -> bool {
  std::vector<VertexSet> pairs;
  auto rec = [&](auto&& self, VertexSet rest) -> bool {
    if (rest.empty()) return f(std::span<const VertexSet>(pairs));
    const int a = rest.front();
    for (int b : rest.without(a)) {
      pairs.push_back(VertexSet{a, b});
      bool go_on = self(self, rest.without(a).without(b));
      pairs.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  if (s.size() % 2 != 0) throw InputError("for_each_pairing: odd set");
  return rec(rec, s);
}

/// First (2k-subset, pairing) admitting no k vertex-disjoint connecting paths.
inline auto find_linkage_failure(const Graph& g, int k) -> std::optional<Witness> {
  if (k < 1 || 2 * k > g.order()) throw InputError("is_k_linked requires 1 <= k and 2k <= n");
  std::optional<Witness> found;
  for_each_ksubset(g.vertices(), 2 * k, [&](VertexSet s) {
    for_each_pairing(s, [&](std::span<const VertexSet> pairs) {
      if (solve_knit(g, pairs)) return true;
      found = Witness{s, SetPartition{{pairs.begin(), pairs.end()}}};
      return false;
    });
    return !found.has_value();
  });
  return found;
}

/// Each pair of a connected branch yields a path inside it, so a knit on the
/// pairs is exactly a linkage.
inline auto is_k_linked(const Graph& g, int k) -> bool { return !find_linkage_failure(g, k).has_value(); }

}  // namespace knit
