#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eccidx/distance.hpp"
#include "eccidx/graph.hpp"
#include "eccidx/graph6.hpp"
#include "eccidx/invariants.hpp"

namespace eccidx {

inline Graph path(std::size_t n) {
  if (n < 1) throw GraphError("path: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edge_list(n, edges);
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph::from_edge_list(n, edges);
}

inline Graph complete(std::size_t n) {
  if (n < 1) throw GraphError("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

/// K_{1,n-1} with center 0.
inline Graph star(std::size_t n) {
  if (n < 2) throw GraphError("star: n must be >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(n, edges);
}

/// Adjacent centers 0 and 1; vertices 2..a+1 hang off 0, a+2..a+b+1 off 1.
inline Graph double_star(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw GraphError("double_star: both sides need at least one leaf");
  std::vector<Edge> edges{{0, 1}};
  for (Vertex i = 0; i < a; ++i) edges.emplace_back(0, 2 + i);
  for (Vertex i = 0; i < b; ++i) edges.emplace_back(1, static_cast<Vertex>(2 + a + i));
  return Graph::from_edge_list(a + b + 2, edges);
}

inline Graph hypercube(unsigned d) {
  if (d < 1 || d > 20) throw GraphError("hypercube: dimension must be in 1..20");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  edges.reserve(n * d / 2);
  for (Vertex x = 0; x < n; ++x) {
    for (unsigned bit = 0; bit < d; ++bit) {
      const Vertex y = x ^ (Vertex{1} << bit);
      if (x < y) edges.emplace_back(x, y);
    }
  }
  return Graph::from_edge_list(n, edges);
}

/// C4 on 0-1-2-3 with k pendants on vertex 0 (indices 4..3+k) and k on
/// vertex 2 (indices 4+k..3+2k).
inline Graph a_k(std::size_t k) {
  if (k < 1) throw GraphError("a_k: k must be >= 1");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (Vertex i = 0; i < k; ++i) {
    edges.emplace_back(0, 4 + i);
    edges.emplace_back(2, static_cast<Vertex>(4 + k + i));
  }
  return Graph::from_edge_list(4 + 2 * k, edges);
}

/// The sporadic 16-vertex UD fixture: path a1..a12 (indices 0..11) with
/// gadgets b3 ~ {a2,a3,a4}, b6 ~ {a5,a6,a7}, b9 ~ {a8,a9,a10},
/// b11 ~ {a11,a12} at indices 12..15.
inline Graph figure1() {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < 12; ++v) edges.emplace_back(v - 1, v);
  for (Vertex a : {1, 2, 3}) edges.emplace_back(a, 12);
  for (Vertex a : {4, 5, 6}) edges.emplace_back(a, 13);
  for (Vertex a : {7, 8, 9}) edges.emplace_back(a, 14);
  for (Vertex a : {10, 11}) edges.emplace_back(a, 15);
  return Graph::from_edge_list(16, edges);
}

/// G □ H with (g, h) at index g * n(H) + h.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.order();
  const std::size_t n = g.order() * nh;
  std::vector<std::vector<Vertex>> rows(n);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < nh; ++b) {
      auto& row = rows[a * nh + b];
      row.reserve(g.degree(a) + h.degree(b));
      // neighbors sorted: first-coordinate moves below a, then same-a
      // second-coordinate moves, then first-coordinate moves above a
      for (Vertex a2 : g.neighbors(a)) {
        if (a2 < a) row.push_back(static_cast<Vertex>(a2 * nh + b));
      }
      for (Vertex b2 : h.neighbors(b)) row.push_back(static_cast<Vertex>(a * nh + b2));
      for (Vertex a2 : g.neighbors(a)) {
        if (a2 > a) row.push_back(static_cast<Vertex>(a2 * nh + b));
      }
    }
  }
  return Graph::from_sorted_adjacency(rows);
}

/// G*: a new pendant at u (index n) and one at v (index n+1).
inline Graph attach_pendants_at(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw GraphError("attach_pendants_at: u and v must differ");
  const auto n = static_cast<Vertex>(g.order());
  if (u >= n || v >= n) throw GraphError("attach_pendants_at: vertex out of range");
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, n);
  edges.emplace_back(v, n + 1);
  return Graph::from_edge_list(n + 2, edges);
}

/// G^{l*}: l-fold pendant growth, so the u-side path uses indices n, n+2, ...
/// and the v-side path n+1, n+3, ...; identical to iterating
/// attach_pendants_at on the current tips.
inline Graph attach_pendant_paths_at(const Graph& g, Vertex u, Vertex v, std::size_t length) {
  if (length < 1) throw GraphError("attach_pendant_paths_at: length must be >= 1");
  if (u == v) throw GraphError("attach_pendant_paths_at: u and v must differ");
  const auto n = static_cast<Vertex>(g.order());
  if (u >= n || v >= n) throw GraphError("attach_pendant_paths_at: vertex out of range");
  std::vector<Edge> edges = g.edges();
  Vertex tip_u = u;
  Vertex tip_v = v;
  for (std::size_t i = 0; i < length; ++i) {
    const auto next = static_cast<Vertex>(n + 2 * i);
    edges.emplace_back(tip_u, next);
    edges.emplace_back(tip_v, next + 1);
    tip_u = next;
    tip_v = next + 1;
  }
  return Graph::from_edge_list(n + 2 * length, edges);
}

/// Diameter-2 graph with exactly n_prime universal vertices (0..n_prime-1)
/// joined to K_k (k = n - n_prime) minus an edge set that leaves every
/// vertex of the K_k side with a non-neighbor: a perfect matching when k is
/// even, a near-perfect matching plus one edge at the unmatched vertex when
/// k is odd.
inline Graph thm29_construction(std::size_t n, std::size_t n_prime) {
  if (n < 3 || n_prime < 1 || n_prime + 2 > n) {
    throw GraphError("thm29_construction: need 3 <= n and 0 < n' <= n-2");
  }
  const std::size_t k = n - n_prime;
  auto removed = [&](Vertex a, Vertex b) {
    // a < b, both relative to the non-universal block
    if (a % 2 == 0 && b == a + 1 && b < k - k % 2) return true;
    return k % 2 == 1 && a == 0 && b == k - 1;
  };
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u >= n_prime && removed(static_cast<Vertex>(u - n_prime), static_cast<Vertex>(v - n_prime))) {
        continue;
      }
      edges.emplace_back(u, v);
    }
  }
  Graph g = Graph::from_edge_list(n, edges);
  const DistanceData d = all_pairs_distances(g);
  if (universal_vertices(g).size() != n_prime || d.diam != 2) {
    throw GraphError("thm29_construction: postcondition violated");
  }
  return g;
}

/// Declarative family description; see parse_family_spec for the text form.
struct FamilySpec {
  enum class Kind {
    path,
    cycle,
    complete,
    star,
    double_star,
    hypercube,
    a_k,
    figure1,
    cartesian,
    pendant_ud,
    pendant_path_ud,
    thm29
  };
  Kind kind = Kind::path;
  // path/cycle/complete/star: [n]; double_star: [a, b]; hypercube: [d];
  // a_k: [k]; thm29: [n, n']; pendant kinds: [l, u, v] with u = v = -1
  // meaning "the canonical UD pair".
  std::vector<std::int64_t> params;
  std::vector<FamilySpec> operands;

  std::string str() const;
};

inline constexpr std::size_t kMaxFamilyDepth = 4;

namespace detail {

struct FamilyKindInfo {
  std::string_view name;
  FamilySpec::Kind kind;
  std::size_t positional;  // integer params after ':'
  std::size_t operands;
};

inline constexpr FamilyKindInfo kFamilyKinds[] = {
    {"path", FamilySpec::Kind::path, 1, 0},
    {"cycle", FamilySpec::Kind::cycle, 1, 0},
    {"complete", FamilySpec::Kind::complete, 1, 0},
    {"star", FamilySpec::Kind::star, 1, 0},
    {"double_star", FamilySpec::Kind::double_star, 2, 0},
    {"hypercube", FamilySpec::Kind::hypercube, 1, 0},
    {"ak", FamilySpec::Kind::a_k, 1, 0},
    {"a_k", FamilySpec::Kind::a_k, 1, 0},
    {"figure1", FamilySpec::Kind::figure1, 0, 0},
    {"cartesian", FamilySpec::Kind::cartesian, 0, 2},
    {"pendant_ud", FamilySpec::Kind::pendant_ud, 0, 1},
    {"pendant_path_ud", FamilySpec::Kind::pendant_path_ud, 0, 1},
    {"thm29", FamilySpec::Kind::thm29, 2, 0},
};

inline const FamilyKindInfo& family_info(FamilySpec::Kind kind) {
  for (const auto& info : kFamilyKinds) {
    if (info.kind == kind) return info;
  }
  throw ParseError("unknown family kind");
}

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_spec(1);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("family spec \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string_view identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  // Key of a "key=value" item at the cursor if the key is one of `keys`.
  std::optional<std::string_view> keyed(std::initializer_list<std::string_view> keys) {
    const std::size_t save = pos_;
    skip_space();
    std::size_t p = pos_;
    while (p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_')) ++p;
    std::size_t q = p;
    while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
    if (p > pos_ && q < text_.size() && text_[q] == '=') {
      const std::string_view key = text_.substr(pos_, p - pos_);
      for (auto k : keys) {
        if (k == key) {
          pos_ = q + 1;
          return key;
        }
      }
    }
    pos_ = save;
    return std::nullopt;
  }

  bool at_integer() {
    skip_space();
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-');
  }

  FamilySpec parse_spec(std::size_t depth) {
    if (depth > kMaxFamilyDepth) fail("nesting deeper than " + std::to_string(kMaxFamilyDepth));
    const std::string_view name = identifier();
    const FamilyKindInfo* info = nullptr;
    for (const auto& candidate : kFamilyKinds) {
      if (candidate.name == name) info = &candidate;
    }
    if (info == nullptr) fail("unknown family \"" + std::string(name) + "\"");

    FamilySpec spec;
    spec.kind = info->kind;
    const bool pendant = spec.kind == FamilySpec::Kind::pendant_ud ||
                         spec.kind == FamilySpec::Kind::pendant_path_ud;
    if (pendant) spec.params = {1, -1, -1};

    if (info->operands > 0) {
      if (!peek('(')) fail("expected '(' after " + std::string(name));
      ++pos_;
      while (true) {
        if (pendant) {
          if (auto key = keyed({"l", "u", "v"})) {
            const std::size_t slot = *key == "l" ? 0 : (*key == "u" ? 1 : 2);
            spec.params[slot] = integer();
          } else {
            spec.operands.push_back(parse_spec(depth + 1));
          }
        } else {
          spec.operands.push_back(parse_spec(depth + 1));
        }
        if (peek(',')) {
          ++pos_;
          continue;
        }
        if (peek(')')) {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      if (spec.operands.size() != info->operands) {
        fail(std::string(name) + " takes " + std::to_string(info->operands) + " operand(s)");
      }
      if (pendant && ((spec.params[1] < 0) != (spec.params[2] < 0))) {
        fail("give both u and v or neither");
      }
      return spec;
    }

    if (info->positional == 0) return spec;
    if (!peek(':')) fail("expected ':' after " + std::string(name));
    ++pos_;
    if (spec.kind == FamilySpec::Kind::thm29) {
      spec.params = {-1, -1};
      for (std::size_t i = 0; i < 2; ++i) {
        if (i > 0) {
          if (!peek(',')) fail("thm29 needs n and np");
          ++pos_;
        }
        if (auto key = keyed({"n", "np"})) {
          spec.params[*key == "n" ? 0 : 1] = integer();
        } else {
          spec.params[i] = integer();
        }
      }
      if (spec.params[0] < 0 || spec.params[1] < 0) fail("thm29 needs n and np");
      return spec;
    }
    for (std::size_t i = 0; i < info->positional; ++i) {
      if (i > 0) {
        if (!peek(',')) fail(std::string(name) + " takes " + std::to_string(info->positional) + " integers");
        ++pos_;
      }
      if (!at_integer()) fail("expected an integer");
      spec.params.push_back(integer());
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the textual family form, e.g. "path:7", "double_star:2,3",
/// "ak:3", "figure1", "cartesian(path:3,cycle:5)", "pendant_ud(ak:1,l=2)",
/// "pendant_ud(path:5,u=0,v=4)", "thm29:n=10,np=1".
inline FamilySpec parse_family_spec(std::string_view text) { return detail::FamilyParser(text).parse(); }

inline std::string FamilySpec::str() const {
  const auto& info = detail::family_info(kind);
  std::string out(info.name);
  switch (kind) {
    case Kind::figure1:
      return out;
    case Kind::cartesian:
      return out + "(" + operands[0].str() + "," + operands[1].str() + ")";
    case Kind::pendant_ud:
    case Kind::pendant_path_ud:
      out += "(" + operands[0].str() + ",l=" + std::to_string(params[0]);
      if (params[1] >= 0) out += ",u=" + std::to_string(params[1]) + ",v=" + std::to_string(params[2]);
      return out + ")";
    case Kind::thm29:
      return out + ":n=" + std::to_string(params[0]) + ",np=" + std::to_string(params[1]);
    default:
      out += ":";
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(params[i]);
      }
      return out;
  }
}

}  // namespace eccidx
