#pragma once

// Comparison theorems for W, E1 and E2 as executable hypothesis/conclusion
// predicates. Every threshold is evaluated in exact integer or rational
// arithmetic; irrational bounds are restated in squared integer form.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "eccidx/distance.hpp"
#include "eccidx/enumerate.hpp"
#include "eccidx/families.hpp"
#include "eccidx/graph.hpp"
#include "eccidx/graph6.hpp"
#include "eccidx/invariants.hpp"
#include "eccidx/rational.hpp"
#include "eccidx/ud.hpp"

namespace eccidx {

/// One named exact quantity recorded alongside a verdict.
struct Quantity {
  const char* name;
  Rational value;
};

struct TheoremVerdict {
  std::string theorem_id;
  bool hypothesis_met = false;
  std::optional<bool> conclusion_held;  // present iff hypothesis_met
  bool equality = false;                // a non-strict bound is tight
  std::string graph_id;                 // graph6
  std::vector<Quantity> detail;

  bool counterexample() const noexcept { return hypothesis_met && conclusion_held == false; }

  std::string detail_string() const {
    std::string out;
    for (const auto& q : detail) {
      if (!out.empty()) out += ';';
      out += q.name;
      out += '=';
      out += q.value.str();
    }
    return out;
  }
};

namespace detail {

inline TheoremVerdict verdict(std::string_view id, const Graph& g) {
  TheoremVerdict v;
  v.theorem_id = std::string(id);
  v.graph_id = emit_graph6(g);
  return v;
}

inline TheoremVerdict& conclude(TheoremVerdict& v, bool hypothesis, bool conclusion) {
  v.hypothesis_met = hypothesis;
  if (hypothesis) {
    v.conclusion_held = conclusion;
  } else {
    v.conclusion_held.reset();
    v.equality = false;
  }
  return v;
}

inline bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// Edges inside the non-universal part: m = C(n',2) + n'(n-n') + x.
inline std::int64_t nonuniversal_edges(const InvariantReport& r) {
  const std::int64_t np = r.n_universal;
  return r.m - np * (np - 1) / 2 - np * (r.n - np);
}

// avd(G') = 2x / (n - n'); zero when G' has no vertices.
inline Rational nonuniversal_avd(const InvariantReport& r) {
  const std::int64_t k = r.n - r.n_universal;
  return k == 0 ? Rational(0) : Rational(2 * nonuniversal_edges(r), k);
}

inline std::int64_t f_bound(std::int64_t x) { return 2 * x * x + 9 * x + 6; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Diameter-2 and self-centered graphs

/// Self-centered, not complete => E2 >= E1, equality iff G is a cycle.
inline TheoremVerdict check_P2_1(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("P2.1", g);
  const bool cycle = detail::is_cycle(g);
  v.equality = r.e1 == r.e2;
  v.detail = {{"E1", r.e1}, {"E2", r.e2}, {"cycle", cycle ? 1 : 0}};
  return detail::conclude(v, r.self_centered && !g.is_complete(), r.e2 >= r.e1 && v.equality == cycle);
}

/// Self-centered with diameter 2 => E2 >= E1, equality iff G is C4 or C5.
inline TheoremVerdict check_C2_2(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("C2.2", g);
  const bool c4_or_c5 = detail::is_cycle(g) && (r.n == 4 || r.n == 5);
  v.equality = r.e1 == r.e2;
  v.detail = {{"E1", r.e1}, {"E2", r.e2}};
  return detail::conclude(v, r.self_centered && r.diam == 2, r.e2 >= r.e1 && v.equality == c4_or_c5);
}

/// Non-self-centered diameter 2: the three-way n'/avd(G') classification
/// predicts the sign of E2 - E1, a tie never occurs, and
/// 2(E2 - E1) = 4(n'-2)(n-n') + n'(n'-3) + 8x.
inline TheoremVerdict check_T2_3(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("T2.3", g);
  const bool hyp = r.diam == 2 && !r.self_centered && r.n >= 3;
  const std::int64_t np = r.n_universal;
  const std::int64_t x = detail::nonuniversal_edges(r);
  const Rational avd = detail::nonuniversal_avd(r);
  const Rational threshold = Rational(1) + Rational(1, 2 * (r.n - 1 > 0 ? r.n - 1 : 1));
  const bool predict_e2_larger =
      np >= 3 || (np == 2 && avd > Rational(0)) || (np == 1 && avd > threshold);
  const std::int64_t diff = r.e2 - r.e1;
  const bool identity = 2 * diff == 4 * (np - 2) * (r.n - np) + np * (np - 3) + 8 * x;
  const bool sign_ok = predict_e2_larger ? diff > 0 : diff < 0;
  v.detail = {{"n'", np},   {"x", x},           {"avd(G')", avd}, {"E1", r.e1},
              {"E2", r.e2}, {"predict_E2>E1", predict_e2_larger}, {"identity", identity}};
  return detail::conclude(v, hyp, sign_ok && identity);
}

/// Diameter 2, n >= 3 => W = n(n-1) - m.
inline TheoremVerdict check_P2_4(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("P2.4", g);
  v.detail = {{"W", r.wiener}, {"n(n-1)-m", r.n * (r.n - 1) - r.m}};
  return detail::conclude(v, r.n >= 3 && r.diam == 2, r.wiener == r.n * (r.n - 1) - r.m);
}

/// n >= 9, diameter 2 => W > E1.
inline TheoremVerdict check_T2_5(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("T2.5", g);
  v.detail = {{"W", r.wiener}, {"E1", r.e1}};
  return detail::conclude(v, r.n >= 9 && r.diam == 2, r.wiener > r.e1);
}

/// Self-centered diameter 2: W > E1 iff m < n(n-5), and W > E2 iff 5m < n(n-1).
inline TheoremVerdict check_P2_6(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("P2.6", g);
  const bool first = (r.wiener > r.e1) == (r.m < r.n * (r.n - 5));
  const bool second = (r.wiener > r.e2) == (5 * r.m < r.n * (r.n - 1));
  v.detail = {{"W", r.wiener}, {"E1", r.e1}, {"E2", r.e2}, {"m", r.m}, {"n", r.n}};
  return detail::conclude(v, r.self_centered && r.diam == 2, first && second);
}

/// Diameter 2 with n' > (n-1)/2 => E2 > W.
inline TheoremVerdict check_T2_7(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("T2.7", g);
  v.detail = {{"n'", r.n_universal}, {"E2", r.e2}, {"W", r.wiener}};
  return detail::conclude(v, r.n >= 3 && r.diam == 2 && 2 * r.n_universal > r.n - 1, r.e2 > r.wiener);
}

namespace detail {

inline TheoremVerdict check_C2_8(const Graph& g, const InvariantReport& r, bool above) {
  auto v = verdict(above ? "C2.8i" : "C2.8ii", g);
  const std::int64_t np = r.n_universal;
  const Rational avd = nonuniversal_avd(r);
  const Rational threshold = Rational(2, 5) * Rational(r.n - 1 - 2 * np);
  const bool gate = r.diam == 2 && np > 0 && 2 * np <= r.n - 1;
  const bool branch = above ? avd > threshold : avd < threshold;
  v.detail = {{"n'", np}, {"avd(G')", avd}, {"threshold", threshold}, {"E2", r.e2}, {"W", r.wiener}};
  return conclude(v, gate && branch, above ? r.e2 > r.wiener : r.e2 < r.wiener);
}

}  // namespace detail

/// 0 < n' <= (n-1)/2 and avd(G') > (2/5)(n-1-2n') => E2 > W.
inline TheoremVerdict check_C2_8i(const Graph& g, const DistanceData&, const InvariantReport& r) {
  return detail::check_C2_8(g, r, true);
}

/// 0 < n' <= (n-1)/2 and avd(G') < (2/5)(n-1-2n') => E2 < W.
inline TheoremVerdict check_C2_8ii(const Graph& g, const DistanceData&, const InvariantReport& r) {
  return detail::check_C2_8(g, r, false);
}

inline std::array<TheoremVerdict, 3> check_T2_7_C2_8(const Graph& g, const DistanceData& d,
                                                     const InvariantReport& r) {
  return {check_T2_7(g, d, r), check_C2_8i(g, d, r), check_C2_8ii(g, d, r)};
}

/// Constructive existence: thm29_construction(n, n') has n' universal
/// vertices, diameter 2 and E2 > W.
inline TheoremVerdict check_T2_9(std::size_t n, std::size_t n_prime) {
  TheoremVerdict v;
  v.theorem_id = "T2.9";
  if (n < 3 || n_prime < 1 || n_prime + 2 > n) return detail::conclude(v, false, false);
  const Graph g = thm29_construction(n, n_prime);
  const DistanceData d = all_pairs_distances(g);
  const InvariantReport r = full_report(g, d);
  v.graph_id = emit_graph6(g);
  v.detail = {{"n", r.n}, {"n'", r.n_universal}, {"diam", r.diam}, {"E2", r.e2}, {"W", r.wiener}};
  return detail::conclude(
      v, true,
      r.n_universal == static_cast<std::int64_t>(n_prime) && r.diam == 2 && r.e2 > r.wiener);
}

// ---------------------------------------------------------------------------
// Trees

/// Tree, n >= 3, d(d-1) <= n-1 => E2 <= W, equality iff T is P3.
inline TheoremVerdict check_T3_1(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("T3.1", g);
  const bool tree = r.m + 1 == r.n;
  const std::int64_t d = r.diam;
  const bool p3 = r.n == 3 && r.diam == 2;
  v.equality = r.e2 == r.wiener;
  v.detail = {{"diam", d}, {"E2", r.e2}, {"W", r.wiener}};
  return detail::conclude(v, tree && r.n >= 3 && d * (d - 1) <= r.n - 1, r.e2 <= r.wiener && v.equality == p3);
}

/// Tree, n > 3, 3 diam >= 2n => W < E1.
inline TheoremVerdict check_T3_2(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("T3.2", g);
  const bool tree = r.m + 1 == r.n;
  v.detail = {{"diam", r.diam}, {"W", r.wiener}, {"E1", r.e1}};
  return detail::conclude(v, tree && r.n > 3 && 3 * r.diam >= 2 * r.n, r.wiener < r.e1);
}

/// Tree, n > 8 => W(T) > E1(T) or W(complement) > E1(complement). A
/// complement with diameter-2 tree is disconnected and its disjunct is false.
inline TheoremVerdict check_T3_3(const Graph& g, const DistanceData&, const InvariantReport& r) {
  auto v = detail::verdict("T3.3", g);
  const bool tree = r.m + 1 == r.n;
  if (!(tree && r.n > 8)) return detail::conclude(v, false, false);
  const bool first = r.wiener > r.e1;
  bool second = false;
  v.detail = {{"W", r.wiener}, {"E1", r.e1}};
  const Graph co = complement(g);
  if (is_connected(co)) {
    const InvariantReport cr = full_report(co);
    second = cr.wiener > cr.e1;
    v.detail.push_back({"W(co)", cr.wiener});
    v.detail.push_back({"E1(co)", cr.e1});
  } else if (r.diam >= 3) {
    throw GraphError("T3.3: complement of a tree with diameter >= 3 is disconnected");
  }
  return detail::conclude(v, true, first || second);
}

// ---------------------------------------------------------------------------
// Eccentricity/transmission gap

/// eps(G) - eps(v) >= Tr(v) for every v, with equality iff eps(u) = d(v,u)
/// for every u != v. `equality` marks graphs where some vertex is tight.
inline TheoremVerdict check_L4_1(const Graph& g, const DistanceData& d, const InvariantReport& r) {
  auto v = detail::verdict("L4.1", g);
  bool held = true;
  std::int64_t min_gap = 0;
  std::int64_t tight = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    const std::int64_t gap = r.total_ecc - d.ecc[x] - d.tr[x];
    bool condition = true;
    const std::int32_t* row = d.row(x);
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u != x && d.ecc[u] != row[u]) condition = false;
    }
    if (gap < 0 || (gap == 0) != condition) held = false;
    if (x == 0 || gap < min_gap) min_gap = gap;
    if (gap == 0) ++tight;
  }
  v.equality = tight > 0;
  v.detail = {{"min_gap", min_gap}, {"tight_vertices", tight}};
  return detail::conclude(v, g.order() >= 1, held);
}

// ---------------------------------------------------------------------------
// Pendant growth at a UD pair

/// G* = attach_pendants_at(G, u, v) with the bookkeeping identities checked.
struct PendantGrowth {
  Graph grown;
  DistanceData distances;
  InvariantReport report;
  bool ecc_shift = false;    // old eccentricities +1, new pendants at d+2
  bool new_pair_ud = false;  // (u', v') is a UD pair of G*
  bool e1_identity = false;  // E1(G*) = E1 + 2 eps(G) + n + 2(d+2)^2
  bool w_identity = false;   // W(G*) = W + Tr(u) + Tr(v) + 2n + d + 2
  bool e2_identity = false;  // E2(G*) = 2(d+2)(d+1) + E2 + m + xi_c

  bool identities() const noexcept { return ecc_shift && new_pair_ud && e1_identity && w_identity && e2_identity; }
};

inline PendantGrowth grow_at_ud_pair(const Graph& g, const DistanceData& d, const InvariantReport& r, Vertex u,
                                     Vertex v) {
  if (!is_ud_pair(g, d, u, v)) throw GraphError("not a UD pair");
  PendantGrowth out;
  out.grown = attach_pendants_at(g, u, v);
  out.distances = all_pairs_distances(out.grown);
  out.report = full_report(out.grown, out.distances);
  const std::int64_t n = r.n;
  const std::int64_t dd = r.diam;
  const auto pu = static_cast<Vertex>(n);
  const auto pv = static_cast<Vertex>(n + 1);
  out.ecc_shift = out.distances.ecc[pu] == dd + 2 && out.distances.ecc[pv] == dd + 2;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (out.distances.ecc[w] != d.ecc[w] + 1) out.ecc_shift = false;
  }
  out.new_pair_ud = out.distances(pu, pv) == out.distances.diam && is_ud_pair(out.grown, out.distances, pu, pv);
  out.e1_identity = out.report.e1 == r.e1 + 2 * r.total_ecc + n + 2 * (dd + 2) * (dd + 2);
  out.w_identity = out.report.wiener == r.wiener + d.tr[u] + d.tr[v] + 2 * n + dd + 2;
  out.e2_identity = out.report.e2 == 2 * (dd + 2) * (dd + 1) + r.e2 + r.m + r.ecc_connectivity;
  return out;
}

/// d-(u,v)-UD graph with f(d) = 2d^2+9d+6 >= n and E1 > W => E1(G*) > W(G*).
/// Throws GraphError if (u, v) is not a UD pair.
inline TheoremVerdict check_T4_2(const Graph& g, const DistanceData& d, const InvariantReport& r, Vertex u,
                                 Vertex v) {
  auto out = detail::verdict("T4.2", g);
  const PendantGrowth grown = grow_at_ud_pair(g, d, r, u, v);
  const bool hyp = detail::f_bound(r.diam) >= r.n && r.e1 > r.wiener;
  out.detail = {{"d", r.diam},
                {"f(d)", detail::f_bound(r.diam)},
                {"n", r.n},
                {"E1", r.e1},
                {"W", r.wiener},
                {"E1*", grown.report.e1},
                {"W*", grown.report.wiener},
                {"identities", grown.identities()}};
  return detail::conclude(out, hyp, grown.report.e1 > grown.report.wiener && grown.identities());
}

inline TheoremVerdict check_T4_2(const Graph& g, Vertex u, Vertex v) {
  const DistanceData d = all_pairs_distances(g);
  return check_T4_2(g, d, full_report(g, d), u, v);
}

/// d-(u,v)-UD graph with m >= n+2d+4, min degree >= 2 and E2 > E1 =>
/// E2(G*) > E1(G*).
inline TheoremVerdict check_T4_3(const Graph& g, const DistanceData& d, const InvariantReport& r, Vertex u,
                                 Vertex v) {
  auto out = detail::verdict("T4.3", g);
  const PendantGrowth grown = grow_at_ud_pair(g, d, r, u, v);
  const bool hyp = r.m >= r.n + 2 * r.diam + 4 && g.min_degree() >= 2 && r.e2 > r.e1;
  out.detail = {{"d", r.diam},   {"n", r.n},   {"m", r.m},
                {"E1", r.e1},    {"E2", r.e2}, {"E1*", grown.report.e1},
                {"E2*", grown.report.e2}, {"identities", grown.identities()}};
  return detail::conclude(out, hyp, grown.report.e2 > grown.report.e1 && grown.identities());
}

inline TheoremVerdict check_T4_3(const Graph& g, Vertex u, Vertex v) {
  const DistanceData d = all_pairs_distances(g);
  return check_T4_3(g, d, full_report(g, d), u, v);
}

/// d-(u,v)-UD graph with f(d+2l-2) >= n+2l-2 and E1 > W =>
/// E1(G^{l*}) > W(G^{l*}). The direct construction is compared with l-fold
/// pendant growth (graph equality, identities at every step, and, when every
/// step meets the single-step hypothesis, agreement of the final verdicts).
inline TheoremVerdict check_C4_4(const Graph& g, const DistanceData& d, const InvariantReport& r, Vertex u,
                                 Vertex v, std::size_t length) {
  if (length < 1) throw GraphError("C4.4: length must be >= 1");
  auto out = detail::verdict("C4.4", g);
  if (!is_ud_pair(g, d, u, v)) throw GraphError("not a UD pair");
  const auto l = static_cast<std::int64_t>(length);
  const bool hyp = detail::f_bound(r.diam + 2 * l - 2) >= r.n + 2 * l - 2 && r.e1 > r.wiener;

  const Graph direct = attach_pendant_paths_at(g, u, v, length);
  const InvariantReport dr = full_report(direct);

  Graph current = g;
  DistanceData cd = d;
  InvariantReport cr = r;
  Vertex tu = u;
  Vertex tv = v;
  bool identities = true;
  bool all_steps_met = true;
  bool last_step_conclusion = false;
  for (std::size_t step = 0; step < length; ++step) {
    PendantGrowth grown = grow_at_ud_pair(current, cd, cr, tu, tv);
    identities = identities && grown.identities();
    all_steps_met = all_steps_met && detail::f_bound(cr.diam) >= cr.n && cr.e1 > cr.wiener;
    last_step_conclusion = grown.report.e1 > grown.report.wiener;
    tu = static_cast<Vertex>(current.order());
    tv = tu + 1;
    current = std::move(grown.grown);
    cd = std::move(grown.distances);
    cr = grown.report;
  }
  const bool same_graph = current == direct;
  const bool direct_conclusion = dr.e1 > dr.wiener;
  const bool agreement = !all_steps_met || last_step_conclusion == direct_conclusion;
  out.detail = {{"d", r.diam},           {"n", r.n},
                {"l", l},                {"f(d+2l-2)", detail::f_bound(r.diam + 2 * l - 2)},
                {"E1", r.e1},            {"W", r.wiener},
                {"E1(l*)", dr.e1},       {"W(l*)", dr.wiener},
                {"iterated_T4.2_gated", all_steps_met}, {"identities", identities}};
  return detail::conclude(out, hyp, direct_conclusion && same_graph && identities && agreement);
}

inline TheoremVerdict check_C4_4(const Graph& g, Vertex u, Vertex v, std::size_t length) {
  const DistanceData d = all_pairs_distances(g);
  return check_C4_4(g, d, full_report(g, d), u, v, length);
}

// ---------------------------------------------------------------------------
// Cartesian products

inline constexpr std::size_t kMaxProductOrder = 10'000;

/// E1, E2 and W of G □ H computed by BFS on the product agree with the
/// closed forms in the factor invariants.
inline TheoremVerdict check_L5_1_L5_3(const Graph& g, const Graph& h) {
  TheoremVerdict out;
  out.theorem_id = "L5.1";
  out.graph_id = emit_graph6(g) + " " + emit_graph6(h);
  if (g.order() == 0 || h.order() == 0 || !is_connected(g) || !is_connected(h) ||
      g.order() * h.order() > kMaxProductOrder) {
    return detail::conclude(out, false, false);
  }
  const InvariantReport a = full_report(g);
  const InvariantReport b = full_report(h);
  const InvariantReport p = full_report(cartesian_product(g, h));
  const std::int64_t e1 = b.n * a.e1 + a.n * b.e1 + 2 * a.total_ecc * b.total_ecc;
  const std::int64_t e2 = b.m * a.e1 + b.n * a.e2 + a.m * b.e1 + a.n * b.e2 + a.total_ecc * b.ecc_connectivity +
                          b.total_ecc * a.ecc_connectivity;
  const std::int64_t w = b.n * b.n * a.wiener + a.n * a.n * b.wiener;
  out.detail = {{"E1", p.e1}, {"E1_closed", e1}, {"E2", p.e2}, {"E2_closed", e2}, {"W", p.wiener}, {"W_closed", w}};
  return detail::conclude(out, true, p.e1 == e1 && p.e2 == e2 && p.wiener == w);
}

/// W >= E1 on both factors and max order > 2 => W(G □ H) > E1(G □ H).
inline TheoremVerdict check_T5_2(const Graph& g, const Graph& h) {
  TheoremVerdict out;
  out.theorem_id = "T5.2";
  out.graph_id = emit_graph6(g) + " " + emit_graph6(h);
  if (!is_connected(g) || !is_connected(h) || g.order() == 0 || h.order() == 0) {
    return detail::conclude(out, false, false);
  }
  const InvariantReport a = full_report(g);
  const InvariantReport b = full_report(h);
  const bool hyp = a.wiener >= a.e1 && b.wiener >= b.e1 && std::max(a.n, b.n) > 2;
  out.detail = {{"W(G)", a.wiener}, {"E1(G)", a.e1}, {"W(H)", b.wiener}, {"E1(H)", b.e1}};
  if (!hyp) return detail::conclude(out, false, false);
  const InvariantReport p = full_report(cartesian_product(g, h));
  out.detail.push_back({"W(GxH)", p.wiener});
  out.detail.push_back({"E1(GxH)", p.e1});
  return detail::conclude(out, true, p.wiener > p.e1);
}

/// W >= max(E1, E2) on both factors, avt(G) > 4 dG^2 dH and
/// avt(H) > 4 dH^2 dG => W(G □ H) > E2(G □ H).
inline TheoremVerdict check_T5_4(const Graph& g, const Graph& h) {
  TheoremVerdict out;
  out.theorem_id = "T5.4";
  out.graph_id = emit_graph6(g) + " " + emit_graph6(h);
  if (!is_connected(g) || !is_connected(h) || g.order() == 0 || h.order() == 0) {
    return detail::conclude(out, false, false);
  }
  const InvariantReport a = full_report(g);
  const InvariantReport b = full_report(h);
  const bool dominates = a.wiener >= std::max(a.e1, a.e2) && b.wiener >= std::max(b.e1, b.e2);
  const Rational bound_g(4 * a.diam * a.diam * b.diam);
  const Rational bound_h(4 * b.diam * b.diam * a.diam);
  const bool hyp = dominates && a.avt > bound_g && b.avt > bound_h;
  out.detail = {{"avt(G)", a.avt}, {"4dG^2dH", bound_g}, {"avt(H)", b.avt}, {"4dH^2dG", bound_h}};
  if (!hyp) return detail::conclude(out, false, false);
  const InvariantReport p = full_report(cartesian_product(g, h));
  out.detail.push_back({"W(GxH)", p.wiener});
  out.detail.push_back({"E2(GxH)", p.e2});
  return detail::conclude(out, true, p.wiener > p.e2);
}

// ---------------------------------------------------------------------------
// Sweep-driven hunting

using UnaryChecker = TheoremVerdict (*)(const Graph&, const DistanceData&, const InvariantReport&);

struct UnaryTheorem {
  std::string_view id;
  UnaryChecker check;
};

inline constexpr UnaryTheorem kUnaryTheorems[] = {
    {"P2.1", check_P2_1}, {"C2.2", check_C2_2},   {"T2.3", check_T2_3},   {"P2.4", check_P2_4},
    {"T2.5", check_T2_5}, {"P2.6", check_P2_6},   {"T2.7", check_T2_7},   {"C2.8i", check_C2_8i},
    {"C2.8ii", check_C2_8ii}, {"T3.1", check_T3_1}, {"T3.2", check_T3_2}, {"T3.3", check_T3_3},
    {"L4.1", check_L4_1},
};

/// Expands "all-unary", "C2.8" (both branches) and validates the rest.
inline std::vector<std::string> expand_theorem_ids(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  auto add = [&](std::string_view id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.emplace_back(id);
  };
  for (const auto& id : ids) {
    if (id == "all-unary" || id == "all") {
      for (const auto& t : kUnaryTheorems) add(t.id);
    } else if (id == "C2.8") {
      add("C2.8i");
      add("C2.8ii");
    } else if (std::any_of(std::begin(kUnaryTheorems), std::end(kUnaryTheorems),
                           [&](const UnaryTheorem& t) { return t.id == id; })) {
      add(id);
    } else {
      throw ParseError("unknown or non-unary theorem id \"" + id + "\"");
    }
  }
  if (out.empty()) throw ParseError("no theorems selected");
  return out;
}

inline UnaryChecker unary_checker(std::string_view id) {
  for (const auto& t : kUnaryTheorems) {
    if (t.id == id) return t.check;
  }
  throw ParseError("unknown or non-unary theorem id \"" + std::string(id) + "\"");
}

inline constexpr std::size_t kReportSampleCap = 256;

/// Aggregate of one theorem over a sweep. Lists keep the kReportSampleCap
/// lexicographically smallest entries; the counts are exact.
struct CheckReport {
  std::string theorem_id;
  std::uint64_t graphs_visited = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<TheoremVerdict> counterexamples;  // sorted by graph_id
  std::uint64_t equality_count = 0;
  std::set<std::string> equality_cases;

  void record(TheoremVerdict&& v) {
    ++graphs_visited;
    if (!v.hypothesis_met) return;
    ++hypothesis_hits;
    if (v.equality) {
      ++equality_count;
      equality_cases.insert(v.graph_id);
      if (equality_cases.size() > kReportSampleCap) equality_cases.erase(std::prev(equality_cases.end()));
    }
    if (v.counterexample()) {
      ++counterexample_count;
      counterexamples.push_back(std::move(v));
      trim();
    }
  }

  void merge(CheckReport&& other) {
    graphs_visited += other.graphs_visited;
    hypothesis_hits += other.hypothesis_hits;
    counterexample_count += other.counterexample_count;
    equality_count += other.equality_count;
    for (auto& c : other.counterexamples) counterexamples.push_back(std::move(c));
    trim();
    equality_cases.merge(other.equality_cases);
    while (equality_cases.size() > kReportSampleCap) equality_cases.erase(std::prev(equality_cases.end()));
  }

 private:
  void trim() {
    std::sort(counterexamples.begin(), counterexamples.end(),
              [](const TheoremVerdict& a, const TheoremVerdict& b) { return a.graph_id < b.graph_id; });
    counterexamples.erase(std::unique(counterexamples.begin(), counterexamples.end(),
                                      [](const TheoremVerdict& a, const TheoremVerdict& b) {
                                        return a.graph_id == b.graph_id;
                                      }),
                          counterexamples.end());
    if (counterexamples.size() > kReportSampleCap) counterexamples.resize(kReportSampleCap);
  }
};

struct HuntResult {
  std::vector<CheckReport> reports;
  SweepSummary summary;

  std::uint64_t counterexamples() const {
    std::uint64_t total = 0;
    for (const auto& r : reports) total += r.counterexample_count;
    return total;
  }
};

/// Applies each unary theorem to every graph of the sweep.
inline HuntResult hunt(const SweepSpec& spec, const std::vector<std::string>& theorem_ids, unsigned workers = 1) {
  const auto ids = expand_theorem_ids(theorem_ids);
  std::vector<UnaryChecker> checkers;
  for (const auto& id : ids) checkers.push_back(unary_checker(id));
  if (workers < 1) workers = 1;

  std::vector<std::vector<CheckReport>> partial(workers, std::vector<CheckReport>(ids.size()));
  HuntResult result;
  result.summary = run_sweep(
      spec,
      [&](const Graph& g, unsigned w) {
        const DistanceData d = all_pairs_distances(g);
        const InvariantReport r = full_report(g, d);
        auto& mine = partial[w];
        for (std::size_t i = 0; i < checkers.size(); ++i) mine[i].record(checkers[i](g, d, r));
      },
      workers);

  result.reports.resize(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    result.reports[i].theorem_id = ids[i];
    for (auto& p : partial) result.reports[i].merge(std::move(p[i]));
  }
  return result;
}

}  // namespace eccidx
