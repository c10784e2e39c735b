#pragma once

#include "eccidx/graph.hpp"

namespace eccidx::fixture {

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edge_list(10, edges);
}

/// K5 minus the edge {3, 4}.
inline Graph k5_minus_edge() {
  return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

}  // namespace eccidx::fixture
