#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eccidx {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for structural precondition failures (bad vertex indices,
/// disconnected input to distance routines, non-tree input, ...).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed form: the neighbors of v are
/// adj_[offsets_[v] .. offsets_[v+1]), sorted ascending with no duplicates.
class Graph {
 public:
  /// The empty graph on 0 vertices.
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; self-loops and out-of-range endpoints throw.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::size_t> degree(n, 0);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n=" + std::to_string(n));
      }
      if (u == v) {
        throw GraphError("self-loop at vertex " + std::to_string(u));
      }
      ++degree[u];
      ++degree[v];
    }
    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    std::vector<Vertex> raw(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
      raw[fill[u]++] = v;
      raw[fill[v]++] = u;
    }
    // sort + dedup each row, then compact
    g.adj_.reserve(raw.size());
    std::size_t start = 0;
    std::vector<std::size_t> compact(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      auto first = raw.begin() + static_cast<std::ptrdiff_t>(start);
      auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
      std::sort(first, last);
      last = std::unique(first, last);
      g.adj_.insert(g.adj_.end(), first, last);
      compact[v + 1] = g.adj_.size();
      start = g.offsets_[v + 1];
    }
    g.offsets_ = std::move(compact);
    g.adj_.shrink_to_fit();
    return g;
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Trusted constructor from already-canonical sorted adjacency rows.
  static Graph from_sorted_adjacency(const std::vector<std::vector<Vertex>>& rows) {
    Graph g;
    g.offsets_.assign(rows.size() + 1, 0);
    for (std::size_t v = 0; v < rows.size(); ++v) {
      g.offsets_[v + 1] = g.offsets_[v] + rows[v].size();
    }
    g.adj_.reserve(g.offsets_.back());
    for (const auto& row : rows) g.adj_.insert(g.adj_.end(), row.begin(), row.end());
    return g;
  }

  /// Graph on masks.size() <= 64 vertices; bit w of masks[v] marks edge vw.
  /// The masks must be symmetric with clear diagonal.
  static Graph from_adjacency_masks(std::span<const std::uint64_t> masks) {
    Graph g;
    const std::size_t n = masks.size();
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::size_t>(__builtin_popcountll(masks[v]));
    }
    g.adj_.resize(g.offsets_[n]);
    std::size_t k = 0;
    for (std::size_t v = 0; v < n; ++v) {
      for (std::uint64_t bits = masks[v]; bits != 0; bits &= bits - 1) {
        g.adj_[k++] = static_cast<Vertex>(__builtin_ctzll(bits));
      }
    }
    return g;
  }

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t size() const noexcept { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::size_t min_degree() const noexcept {
    std::size_t best = order() == 0 ? 0 : degree(0);
    for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
    return best;
  }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool is_complete() const noexcept {
    const std::size_t n = order();
    return size() == n * (n - (n > 0 ? 1 : 0)) / 2;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
};

/// True iff a BFS from vertex 0 reaches every vertex. The graphs on 0 and 1
/// vertices count as connected.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.neighbors(queue[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == n;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> rows(n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = g.neighbors(u);
    auto it = row.begin();
    rows[u].reserve(n - 1 - row.size());
    for (Vertex v = 0; v < n; ++v) {
      if (it != row.end() && *it == v) {
        ++it;
        continue;
      }
      if (v != u) rows[u].push_back(v);
    }
  }
  return Graph::from_sorted_adjacency(rows);
}

/// Subgraph induced by `keep`, relabeled 0..|keep|-1 in ascending order of
/// the original indices. Duplicates in `keep` are ignored.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> relabel(g.order(), kAbsent);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= g.order()) {
      throw GraphError("induced_subgraph: vertex " + std::to_string(sorted[i]) +
                       " out of range");
    }
    relabel[sorted[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> rows(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (Vertex w : g.neighbors(sorted[i])) {
      if (relabel[w] != kAbsent) rows[i].push_back(relabel[w]);
    }
  }
  return Graph::from_sorted_adjacency(rows);
}

}  // namespace eccidx
