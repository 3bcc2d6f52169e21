#pragma once

/**
 * graph6 and plain edge-list reading/writing.
 *
 * graph6: optional ">>graph6<<" header, then N(n) followed by the upper
 * triangle of the adjacency matrix in column order (x(0,1), x(0,2), x(1,2),
 * x(0,3), ...), six bits per printable byte (value + 63), zero padded.
 *
 * Edge list: "n m" then m lines "u v" (0-based). Blank lines and lines
 * starting with '#' are skipped.
 */

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "knit/errors.hpp"
#include "knit/graph.hpp"

namespace knit {

namespace detail {

inline auto trim(std::string_view s) -> std::string_view {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

inline auto line_error(int line_no, const std::string& what) -> InputError {
  if (line_no > 0) return InputError("line " + std::to_string(line_no) + ": " + what);
  return InputError(what);
}

}  // namespace detail

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline auto to_graph6(const Graph& g) -> std::string {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Parses one graph6 line. `line_no` only labels error messages.
inline auto parse_graph6(std::string_view text, int line_no = 0) -> Graph {
  text = detail::trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw detail::line_error(line_no, "graph6: empty line");

  for (char ch : text)
    if (ch < 63 || ch > 126) throw detail::line_error(line_no, "graph6: byte outside 63..126");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw detail::line_error(line_no, "graph6: order too large");
    if (text.size() < 4) throw detail::line_error(line_no, "graph6: truncated order field");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices)
    throw detail::line_error(line_no, "graph6: order " + std::to_string(n) + " outside 1..64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw detail::line_error(line_no, "graph6: truncated adjacency data");
  if (text.size() - pos > bytes) throw detail::line_error(line_no, "graph6: trailing bytes after adjacency data");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    int byte = text[pos + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw detail::line_error(line_no, "graph6: nonzero padding bits");
  }
  return g;
}

/// Every non-blank line is one graph.
inline auto read_graph6_stream(std::istream& in) -> std::vector<Graph> {
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = detail::trim(line);
    if (body.empty() || body == kGraph6Header) continue;
    out.push_back(parse_graph6(body, line_no));
  }
  return out;
}

inline auto to_edge_list(const Graph& g) -> std::string {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

inline auto read_edge_list(std::istream& in) -> Graph {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& body) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto t = detail::trim(line);
      if (t.empty() || t.front() == '#') continue;
      body.assign(t);
      return true;
    }
    return false;
  };

  std::string body;
  if (!next_line(body)) throw InputError("edge list: missing header \"n m\"");
  long long n = 0, m = 0;
  {
    std::istringstream hs(body);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw detail::line_error(line_no, "edge list: header must be \"n m\"");
  }
  if (n < 1 || n > kMaxVertices) throw detail::line_error(line_no, "edge list: order outside 1..64");
  if (m < 0 || m > n * (n - 1) / 2) throw detail::line_error(line_no, "edge list: impossible edge count");

  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line(body)) throw InputError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    std::istringstream es(body);
    long long u = 0, v = 0;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) throw detail::line_error(line_no, "edge list: expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n) throw detail::line_error(line_no, "edge list: vertex out of range");
    if (u == v) throw detail::line_error(line_no, "edge list: self-loop");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw detail::line_error(line_no, "edge list: duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(body)) throw detail::line_error(line_no, "edge list: unexpected trailing content");
  return g;
}

inline auto parse_edge_list(std::string_view text) -> Graph {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

/// 64-bit FNV-1a of the graph6 encoding, as 16 hex digits.
inline auto graph_hash(const Graph& g) -> std::string {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_graph6(g)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kHex[h & 15];
  return out;
}

}  // namespace knit
