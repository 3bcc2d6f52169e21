#pragma once

/**
 * Enumeration of k-subsets (lexicographic) and set partitions (restricted
 * growth string order) over vertex sets.
 */

#include <cstdint>
#include <algorithm>
#include <span>
#include <type_traits>
#include <vector>

#include "knit/errors.hpp"
#include "knit/vertex_set.hpp"

namespace knit {

/// Ordered nonempty disjoint blocks. Canonical order puts blocks by minimum element.
struct SetPartition {
  std::vector<VertexSet> parts;

  auto block_count() const -> int { return static_cast<int>(parts.size()); }
  auto ground() const -> VertexSet {
    VertexSet out;
    for (auto p : parts) out |= p;
    return out;
  }
  /// Blocks nonempty and pairwise disjoint.
  auto is_valid() const -> bool {
    VertexSet seen;
    for (auto p : parts) {
      if (p.empty() || p.intersects(seen)) return false;
      seen |= p;
    }
    return true;
  }
  friend auto operator==(const SetPartition&, const SetPartition&) -> bool = default;
};

inline auto binomial(int n, int k) -> std::uint64_t {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Number of set partitions of an m-element set with at least min_parts
/// blocks, via Stirling numbers of the second kind.
inline auto partition_count(int m, int min_parts = 1) -> std::uint64_t {
  std::vector<std::vector<std::uint64_t>> s(m + 1, std::vector<std::uint64_t>(m + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + static_cast<std::uint64_t>(j) * s[i - 1][j];
  std::uint64_t total = 0;
  for (int j = std::max(min_parts, 0); j <= m; ++j) total += s[m][j];
  return total;
}

/// Calls f(VertexSet) for every k-subset of `universe`, lexicographically by
/// sorted member list. k > |universe| yields nothing; k = 0 yields {} once.
/// Stops early when f returns false (f may also return void).
template <class F>
auto for_each_ksubset(VertexSet universe, int k, F&& f) -> void {
  const auto members = universe.to_vector();
  const int m = static_cast<int>(members.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(members[i]);
    if constexpr (std::is_same_v<decltype(f(s)), bool>) {
      if (!f(s)) return;
    } else {
      f(s);
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline auto enumerate_ksubsets(VertexSet universe, int k) -> std::vector<VertexSet> {
  std::vector<VertexSet> out;
  for_each_ksubset(universe, k, [&](VertexSet s) { out.push_back(s); });
  return out;
}

/// Calls f(std::span<const VertexSet>) for every partition of `ground` with at
/// least min_parts blocks, in restricted-growth-string order. Stops early when
/// f returns false.
template <class F>
auto for_each_partition(VertexSet ground, int min_parts, F&& f) -> void {
  if (ground.empty()) throw InputError("enumerate_partitions: empty ground set");
  const auto members = ground.to_vector();
  const int m = static_cast<int>(members.size());
  if (min_parts < 1 || min_parts > m) throw InputError("enumerate_partitions: min_parts out of range");

  // rgs[i] is the block of members[i]; prefix_max[i] = max(rgs[0..i]).
  std::vector<int> rgs(m, 0), prefix_max(m, 0);
  std::vector<VertexSet> blocks;
  blocks.reserve(m);
  while (true) {
    int t = prefix_max[m - 1] + 1;
    if (t >= min_parts) {
      blocks.assign(t, VertexSet{});
      for (int i = 0; i < m; ++i) blocks[rgs[i]].insert(members[i]);
      std::span<const VertexSet> view(blocks);
      if constexpr (std::is_same_v<decltype(f(view)), bool>) {
        if (!f(view)) return;
      } else {
        f(view);
      }
    }
    int i = m - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < m; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
}

inline auto enumerate_partitions(VertexSet ground, int min_parts) -> std::vector<SetPartition> {
  std::vector<SetPartition> out;
  for_each_partition(ground, min_parts, [&](std::span<const VertexSet> blocks) {
    out.push_back(SetPartition{{blocks.begin(), blocks.end()}});
  });
  return out;
}

}  // namespace knit
