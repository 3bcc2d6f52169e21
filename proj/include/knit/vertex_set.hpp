#pragma once

/**
 * Vertex subsets of a graph on at most 64 vertices, stored as one machine word.
 */

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace knit {

inline constexpr int kMaxVertices = 64;

class VertexSet {
 public:
  using word_type = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(word_type bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// The set {0, 1, ..., n-1}.
  static constexpr auto prefix(int n) -> VertexSet {
    return VertexSet(n >= kMaxVertices ? ~word_type{0} : (word_type{1} << n) - 1);
  }
  static constexpr auto single(int v) -> VertexSet { return VertexSet(word_type{1} << v); }

  constexpr auto bits() const -> word_type { return bits_; }
  constexpr auto size() const -> int { return std::popcount(bits_); }
  constexpr auto empty() const -> bool { return bits_ == 0; }
  constexpr auto contains(int v) const -> bool { return (bits_ >> v) & 1U; }
  constexpr auto insert(int v) -> void { bits_ |= word_type{1} << v; }
  constexpr auto erase(int v) -> void { bits_ &= ~(word_type{1} << v); }

  /// Smallest member; undefined on the empty set.
  constexpr auto front() const -> int { return std::countr_zero(bits_); }
  /// Largest member; undefined on the empty set.
  constexpr auto back() const -> int { return 63 - std::countl_zero(bits_); }

  constexpr auto subset_of(VertexSet other) const -> bool { return (bits_ & ~other.bits_) == 0; }
  constexpr auto intersects(VertexSet other) const -> bool { return (bits_ & other.bits_) != 0; }

  constexpr auto with(int v) const -> VertexSet { return VertexSet(bits_ | (word_type{1} << v)); }
  constexpr auto without(int v) const -> VertexSet { return VertexSet(bits_ & ~(word_type{1} << v)); }

  friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr auto operator|=(VertexSet o) -> VertexSet& { bits_ |= o.bits_; return *this; }
  constexpr auto operator&=(VertexSet o) -> VertexSet& { bits_ &= o.bits_; return *this; }
  constexpr auto operator-=(VertexSet o) -> VertexSet& { bits_ &= ~o.bits_; return *this; }

  friend constexpr auto operator==(VertexSet, VertexSet) -> bool = default;

  /// Orders sets by their sorted member lists, lexicographically.
  friend auto lex_less(VertexSet a, VertexSet b) -> bool {
    while (!a.empty() && !b.empty()) {
      int x = a.front(), y = b.front();
      if (x != y) return x < y;
      a.erase(x);
      b.erase(y);
    }
    return a.empty() && !b.empty();
  }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}
    constexpr auto operator*() const -> int { return std::countr_zero(rest_); }
    constexpr auto operator++() -> iterator& {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr auto operator++(int) -> iterator {
      auto old = *this;
      ++*this;
      return old;
    }
    friend constexpr auto operator==(iterator, iterator) -> bool = default;

   private:
    word_type rest_ = 0;
  };

  constexpr auto begin() const -> iterator { return iterator(bits_); }
  constexpr auto end() const -> iterator { return iterator(0); }

  auto to_vector() const -> std::vector<int> { return {begin(), end()}; }

  auto to_string() const -> std::string {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

  friend auto operator<<(std::ostream& os, VertexSet s) -> std::ostream& { return os << s.to_string(); }

 private:
  word_type bits_ = 0;
};

}  // namespace knit
