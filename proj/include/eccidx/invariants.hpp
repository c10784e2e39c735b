#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "eccidx/distance.hpp"
#include "eccidx/graph.hpp"
#include "eccidx/rational.hpp"

namespace eccidx {

namespace detail {

// Overflow is asserted in debug builds only; release builds rely on the
// W <= n^3 bound keeping everything inside 64 bits for n <= 10^5.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  [[maybe_unused]] const bool overflow = __builtin_mul_overflow(a, b, &out);
  assert(!overflow);
  return out;
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  [[maybe_unused]] const bool overflow = __builtin_add_overflow(a, b, &out);
  assert(!overflow);
  return out;
}

}  // namespace detail

/// Wiener index as half the transmission sum.
inline std::int64_t wiener(const Graph& g, const DistanceData& d) {
  (void)g;
  std::int64_t twice = 0;
  for (std::int64_t t : d.tr) twice = detail::add(twice, t);
  assert(twice % 2 == 0);
  return twice / 2;
}

/// Wiener's edge-cut formula for trees: sum over edges of the two component
/// sizes left after deleting the edge.
inline std::int64_t wiener_tree_edgecut(const Graph& t) {
  if (!is_tree(t)) throw GraphError("not a tree");
  const std::size_t n = t.order();
  if (n == 1) return 0;
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> parent(n, kNone);
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[w] == kNone) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::int64_t> subtree(n, 1);
  std::int64_t total = 0;
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t i = order.size(); i-- > 1;) {
    const Vertex v = order[i];
    subtree[parent[v]] += subtree[v];
    total = detail::add(total, detail::mul(subtree[v], nn - subtree[v]));
  }
  return total;
}

inline std::int64_t zagreb_ecc_1(const Graph& g, const DistanceData& d) {
  (void)g;
  std::int64_t sum = 0;
  for (std::int64_t e : d.ecc) sum = detail::add(sum, e * e);
  return sum;
}

/// Each undirected edge is visited once through the u < v filter.
inline std::int64_t zagreb_ecc_2(const Graph& g, const DistanceData& d) {
  std::int64_t sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const std::int64_t eu = d.ecc[u];
    for (Vertex v : g.neighbors(u)) {
      if (u < v) sum = detail::add(sum, eu * d.ecc[v]);
    }
  }
  return sum;
}

inline std::int64_t total_eccentricity(const DistanceData& d) {
  std::int64_t sum = 0;
  for (std::int64_t e : d.ecc) sum += e;
  return sum;
}

inline std::int64_t eccentric_connectivity(const Graph& g, const DistanceData& d) {
  std::int64_t sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    sum = detail::add(sum, static_cast<std::int64_t>(g.degree(v)) * d.ecc[v]);
  }
  return sum;
}

inline std::vector<Vertex> universal_vertices(const Graph& g) {
  std::vector<Vertex> out;
  if (g.order() == 0) return out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 == g.order()) out.push_back(v);
  }
  return out;
}

/// All scalar invariants of one connected graph.
struct InvariantReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t diam = 0;
  std::int64_t rad = 0;
  std::int64_t wiener = 0;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  std::int64_t total_ecc = 0;
  std::int64_t ecc_connectivity = 0;
  std::int64_t n_universal = 0;
  Rational avd;
  Rational avt;
  bool self_centered = true;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

inline InvariantReport full_report(const Graph& g, const DistanceData& d) {
  if (g.order() == 0) throw GraphError("full_report: graph has no vertices");
  InvariantReport r;
  r.n = static_cast<std::int64_t>(g.order());
  r.m = static_cast<std::int64_t>(g.size());
  r.diam = d.diam;
  r.rad = d.rad;
  r.wiener = wiener(g, d);
  r.e1 = zagreb_ecc_1(g, d);
  r.e2 = zagreb_ecc_2(g, d);
  r.total_ecc = total_eccentricity(d);
  r.ecc_connectivity = eccentric_connectivity(g, d);
  r.n_universal = static_cast<std::int64_t>(universal_vertices(g).size());
  r.avd = Rational(2 * r.m, r.n);
  r.avt = Rational(2 * r.wiener, r.n);
  r.self_centered = d.diam == d.rad;

  std::int64_t direct = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const std::int32_t* row = d.row(u);
    for (Vertex v = u + 1; v < g.order(); ++v) direct += row[v];
  }
  if (direct != r.wiener) throw GraphError("full_report: Wiener cross-check failed");
  return r;
}

inline InvariantReport full_report(const Graph& g) { return full_report(g, all_pairs_distances(g)); }

}  // namespace eccidx
