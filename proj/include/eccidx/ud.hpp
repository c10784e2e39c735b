#pragma once

// Eccentric sets and universally diametrical (UD) pairs. A diametrical pair
// (u, v) is UD when every other vertex has u or v among its eccentric
// vertices.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eccidx/distance.hpp"
#include "eccidx/graph.hpp"

namespace eccidx {

inline std::vector<Vertex> eccentric_set(const DistanceData& d, Vertex v) {
  std::vector<Vertex> out;
  const std::int32_t* row = d.row(v);
  for (Vertex u = 0; u < d.n; ++u) {
    if (row[u] == d.ecc[v] && (u != v || d.n == 1)) out.push_back(u);
  }
  return out;
}

/// Unordered pairs u < v at distance diam, lexicographic.
inline std::vector<Edge> diametrical_pairs(const DistanceData& d) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < d.n; ++u) {
    const std::int32_t* row = d.row(u);
    for (Vertex v = u + 1; v < d.n; ++v) {
      if (row[v] == d.diam) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace detail {

/// First vertex w outside {u, v} with neither u nor v eccentric to it.
inline std::optional<Vertex> ud_witness(const DistanceData& d, Vertex u, Vertex v) {
  const std::int32_t* du = d.row(u);
  const std::int32_t* dv = d.row(v);
  for (Vertex w = 0; w < d.n; ++w) {
    if (w == u || w == v) continue;
    if (std::max(du[w], dv[w]) != d.ecc[w]) return w;
  }
  return std::nullopt;
}

}  // namespace detail

/// Throws GraphError if (u, v) is not diametrical.
inline bool is_ud_pair(const Graph& g, const DistanceData& d, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order() || u == v || d(u, v) != d.diam) {
    throw GraphError("is_ud_pair: pair is not diametrical");
  }
  return !detail::ud_witness(d, u, v).has_value();
}

struct UdFailure {
  Edge pair;
  Vertex witness;
};

struct UdCertificate {
  bool is_ud = false;
  std::optional<Edge> pair;
  std::int32_t diam = 0;
  std::vector<UdFailure> failures;  // pairs scanned before the first UD pair
};

/// Scans diametrical pairs lexicographically and returns the first UD pair.
/// K1 and K2 are UD vacuously (K1 reports no pair, K2 reports (0, 1)).
inline UdCertificate find_ud_certificate(const Graph& g, const DistanceData& d) {
  UdCertificate cert;
  cert.diam = d.diam;
  if (g.order() <= 1) {
    cert.is_ud = true;
    return cert;
  }
  for (const auto& [u, v] : diametrical_pairs(d)) {
    if (auto w = detail::ud_witness(d, u, v)) {
      cert.failures.push_back({{u, v}, *w});
    } else {
      cert.is_ud = true;
      cert.pair = Edge{u, v};
      return cert;
    }
  }
  return cert;
}

inline UdCertificate find_ud_certificate(const Graph& g) {
  return find_ud_certificate(g, all_pairs_distances(g));
}

/// eps(G) - eps(v) - Tr(v); never negative, zero exactly when every other
/// vertex u has eccentricity d(v, u).
inline std::int64_t lemma41_gap(const Graph& g, const DistanceData& d, Vertex v) {
  (void)g;
  std::int64_t total = 0;
  for (std::int64_t e : d.ecc) total += e;
  return total - d.ecc[v] - d.tr[v];
}

}  // namespace eccidx
