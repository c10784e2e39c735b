#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "eccidx/graph.hpp"

namespace eccidx {

/// All-pairs hop distances of a connected graph with eccentricities and
/// transmissions precomputed. K1 has ecc = tr = diam = rad = 0; the empty
/// graph has no vertices and diam = rad = 0.
struct DistanceData {
  std::size_t n = 0;
  std::vector<std::int32_t> dist;  // row-major n*n
  std::vector<std::int32_t> ecc;
  std::vector<std::int64_t> tr;
  std::int32_t diam = 0;
  std::int32_t rad = 0;

  std::int32_t operator()(Vertex u, Vertex v) const noexcept { return dist[u * n + v]; }
  const std::int32_t* row(Vertex u) const noexcept { return dist.data() + u * n; }

  bool self_centered() const noexcept { return diam == rad; }
};

/// BFS from every vertex. Throws GraphError("disconnected") if some pair is
/// unreachable.
inline DistanceData all_pairs_distances(const Graph& g) {
  DistanceData d;
  const std::size_t n = g.order();
  d.n = n;
  d.dist.assign(n * n, -1);
  d.ecc.assign(n, 0);
  d.tr.assign(n, 0);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::int32_t* row = d.dist.data() + s * n;
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    std::int64_t total = 0;
    while (head < tail) {
      const Vertex u = queue[head++];
      const std::int32_t next = row[u] + 1;
      for (Vertex w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = next;
          total += next;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) throw GraphError("disconnected");
    d.ecc[s] = row[queue[n - 1]];
    d.tr[s] = total;
  }
  if (n > 0) {
    const auto [lo, hi] = std::minmax_element(d.ecc.begin(), d.ecc.end());
    d.rad = *lo;
    d.diam = *hi;
  }
  return d;
}

}  // namespace eccidx
