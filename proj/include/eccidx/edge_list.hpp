#pragma once

// Plain-text edge-list format:
//   # comment lines are ignored
//   n m
//   u v        (m lines, 0-based endpoints)
// Several graphs may follow one another in the same stream.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "eccidx/graph.hpp"
#include "eccidx/graph6.hpp"

namespace eccidx {

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace detail

/// Reads the next edge-list graph from `in`; returns false at end of input.
inline bool read_edge_list(std::istream& in, Graph& out, std::size_t& line_no) {
  std::string line;
  if (!detail::next_content_line(in, line, line_no)) return false;
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  std::string extra;
  if (!(header >> n >> m) || n < 0 || m < 0 || (header >> extra)) {
    throw ParseError("line " + std::to_string(line_no) + ": expected header \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!detail::next_content_line(in, line, line_no)) {
      throw ParseError("edge list ended after " + std::to_string(i) + " of " +
                       std::to_string(m) + " edges");
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected edge \"u v\"");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    out = Graph::from_edge_list(static_cast<std::size_t>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
  return true;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::size_t line_no = 0;
  Graph g;
  if (!read_edge_list(in, g, line_no)) throw ParseError("edge list: no header line");
  return g;
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace eccidx
