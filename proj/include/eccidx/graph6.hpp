#pragma once

// graph6 encoding (nauty/McKay). Size header N(n), then the upper triangle of
// the adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... packed six
// bits per byte, most significant bit first, each byte offset by 63.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eccidx/graph.hpp"

namespace eccidx {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;

namespace detail {

inline void append_graph6_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
    }
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
    }
  }
}

inline unsigned graph6_sextet(char c) {
  const auto byte = static_cast<unsigned char>(c);
  if (byte < 63 || byte > 126) {
    throw ParseError("graph6: byte " + std::to_string(byte) + " outside 63..126");
  }
  return byte - 63;
}

}  // namespace detail

inline std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  detail::append_graph6_size(out, n);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  out.reserve(out.size() + (bits + 5) / 6);
  unsigned acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    auto row = g.neighbors(v);
    auto it = row.begin();
    for (Vertex u = 0; u < v; ++u) {
      while (it != row.end() && *it < u) ++it;
      const unsigned bit = (it != row.end() && *it == u) ? 1U : 0U;
      acc = (acc << 1) | bit;
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Decodes one graph6 line. A trailing newline / carriage return and the
/// optional ">>graph6<<" header are accepted.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = detail::graph6_sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
    if (text.size() < 8) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | detail::graph6_sextet(text[i]);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::graph6_sextet(text[i]);
    pos = 4;
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (text.size() - pos < need) throw ParseError("graph6: truncated bit stream");
  if (text.size() - pos > need) throw ParseError("graph6: trailing bytes after bit stream");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const unsigned sextet = detail::graph6_sextet(text[pos + k / 6]);
      if ((sextet >> (5 - k % 6)) & 1U) edges.emplace_back(u, v);
    }
  }
  // padding bytes are still validated
  for (std::size_t i = pos; i < text.size(); ++i) detail::graph6_sextet(text[i]);
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

}  // namespace eccidx
