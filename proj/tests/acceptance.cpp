// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   eccidx_acceptance            run every criterion
//   eccidx_acceptance 4 9        run selected criteria
//
// Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "eccidx/eccidx.hpp"
#include "eccidx/io.hpp"
#include "oracles.hpp"

using namespace eccidx;

namespace {

constexpr std::uint64_t kSampleSeed = 20200101;
constexpr std::uint64_t kSamplesPerOrder = 100'000;

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    pass = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
  void info(const std::string& what) {
    if (!note.empty()) note += "; ";
    note += what;
  }
};

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

Outcome closed_forms() {
  Outcome out;
  for (std::int64_t n = 3; n <= 10; ++n) {
    const InvariantReport r = full_report(complete(static_cast<std::size_t>(n)));
    if (r.e1 != n || r.e2 != n * (n - 1) / 2 || r.wiener != n * (n - 1) / 2) {
      out.fail("K" + std::to_string(n));
    }
  }
  for (std::int64_t n = 3; n <= 20; ++n) {
    const InvariantReport r = full_report(cycle(static_cast<std::size_t>(n)));
    const std::int64_t h = n / 2;
    if (r.e1 != n * h * h || r.e2 != n * h * h) out.fail("C" + std::to_string(n));
  }
  return out;
}

/// BFS against Floyd-Warshall on every connected labeled graph n <= 7.
/// The report is the visit count, mismatch count and an order-independent
/// checksum of (graph6, distance matrix).
std::string distance_oracle_report(unsigned workers, std::uint64_t* mismatches) {
  std::vector<std::uint64_t> bad(workers, 0);
  std::vector<std::uint64_t> checksum(workers, 0);
  const SweepSummary s = run_sweep(
      parse_sweep_spec("connected:1..7"),
      [&](const Graph& g, unsigned w) {
        const DistanceData d = all_pairs_distances(g);
        const auto fw = oracle::floyd_warshall(g);
        std::string key = emit_graph6(g);
        for (Vertex u = 0; u < g.order(); ++u) {
          for (Vertex v = 0; v < g.order(); ++v) {
            if (d(u, v) != fw[u][v]) ++bad[w];
            key.push_back(static_cast<char>('0' + d(u, v)));
          }
        }
        checksum[w] += fnv1a(key);
      },
      workers);
  std::uint64_t total_bad = 0;
  std::uint64_t total_sum = 0;
  for (unsigned w = 0; w < workers; ++w) {
    total_bad += bad[w];
    total_sum += checksum[w];
  }
  *mismatches = total_bad;
  std::ostringstream os;
  os << "visited=" << s.visited << " mismatches=" << total_bad << " checksum=" << std::hex << total_sum;
  return os.str();
}

Outcome distance_oracle() {
  Outcome out;
  std::uint64_t bad = 0;
  const unsigned workers = default_workers();
  const std::string report = distance_oracle_report(workers, &bad);
  out.info(report + " workers=" + std::to_string(workers));
  if (bad != 0) out.fail("BFS disagrees with Floyd-Warshall");
  if (report.find("visited=1893732 ") == std::string::npos) out.fail("expected 1893732 connected graphs");
  return out;
}

Outcome tree_identity() {
  Outcome out;
  std::uint64_t trees = 0;
  std::uint64_t bad = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    enumerate_trees(n, [&](const Graph& t) {
      ++trees;
      if (wiener_tree_edgecut(t) != full_report(t).wiener) ++bad;
    });
  }
  out.info("trees=" + std::to_string(trees) + " mismatches=" + std::to_string(bad));
  if (trees != 986) out.fail("expected 986 trees");
  if (bad != 0) out.fail("edge-cut Wiener mismatch");
  return out;
}

void require_clean(Outcome& out, const HuntResult& result) {
  for (const auto& r : result.reports) {
    out.info(r.theorem_id + " hits=" + std::to_string(r.hypothesis_hits) +
             " cex=" + std::to_string(r.counterexample_count));
    if (r.hypothesis_hits == 0) out.fail(r.theorem_id + " hypothesis never met");
    for (const auto& c : r.counterexamples) {
      out.fail(r.theorem_id + " counterexample " + c.graph_id + " [" + c.detail_string() + "]");
    }
  }
}

std::set<std::string> canonical_set(const std::set<std::string>& graph6s) {
  std::set<std::string> out;
  for (const auto& s : graph6s) out.insert(oracle::brute_canonical_form(parse_graph6(s)));
  return out;
}

Outcome diameter2_sweep() {
  Outcome out;
  const HuntResult result =
      hunt(parse_sweep_spec("connected:3..7"), {"P2.1", "C2.2", "T2.3", "P2.4", "P2.6"}, default_workers());
  require_clean(out, result);
  const CheckReport& c22 = result.reports[1];
  if (c22.equality_count != c22.equality_cases.size()) {
    out.fail("C2.2 equality list truncated");
  } else {
    const std::set<std::string> expected = {oracle::brute_canonical_form(cycle(4)),
                                            oracle::brute_canonical_form(cycle(5))};
    if (canonical_set(c22.equality_cases) != expected) out.fail("C2.2 equality set is not {C4, C5}");
  }
  return out;
}

std::string sampled_report(unsigned workers, HuntResult* keep = nullptr) {
  SweepSpec spec = parse_sweep_spec("diam2:n=9..12,count=" + std::to_string(kSamplesPerOrder) +
                                    ",seed=" + std::to_string(kSampleSeed));
  HuntResult result = hunt(spec, {"T2.5", "T2.7", "C2.8"}, workers);
  std::string report = spec.str() + "\n" + to_csv(result.reports);
  if (keep != nullptr) *keep = std::move(result);
  return report;
}

Outcome sampled_sweep() {
  Outcome out;
  HuntResult result;
  const std::string first = sampled_report(default_workers(), &result);
  require_clean(out, result);
  if (result.summary.visited != 4 * kSamplesPerOrder) out.fail("wrong sample count");
  if (sampled_report(default_workers()) != first) out.fail("not reproducible under the seed");
  return out;
}

std::string tree_report(unsigned workers, HuntResult* small, HuntResult* large) {
  HuntResult a = hunt(parse_sweep_spec("trees:2..14"), {"T3.1", "T3.2"}, workers);
  HuntResult b = hunt(parse_sweep_spec("trees:9..12"), {"T3.3"}, workers);
  std::string report = to_csv(a.reports) + to_csv(b.reports);
  if (small != nullptr) *small = std::move(a);
  if (large != nullptr) *large = std::move(b);
  return report;
}

Outcome tree_theorems() {
  Outcome out;
  HuntResult small;
  HuntResult large;
  tree_report(default_workers(), &small, &large);
  require_clean(out, small);
  require_clean(out, large);
  const CheckReport& t31 = small.reports[0];
  if (t31.equality_cases.size() != 1 ||
      oracle::tree_canonical_form(parse_graph6(*t31.equality_cases.begin())) !=
          oracle::tree_canonical_form(path(3))) {
    out.fail("T3.1 equality set is not {P3}");
  }
  return out;
}

Outcome lemma41() {
  Outcome out;
  const HuntResult graphs = hunt(parse_sweep_spec("connected:1..7"), {"L4.1"}, default_workers());
  const HuntResult trees = hunt(parse_sweep_spec("trees:2..12"), {"L4.1"}, default_workers());
  require_clean(out, graphs);
  require_clean(out, trees);
  return out;
}

Outcome ud_suite() {
  Outcome out;
  std::uint64_t non_ud_trees = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    enumerate_trees(n, [&](const Graph& t) { non_ud_trees += find_ud_certificate(t).is_ud ? 0 : 1; });
  }
  if (non_ud_trees != 0) out.fail(std::to_string(non_ud_trees) + " trees not UD");

  for (std::size_t k = 1; k <= 5; ++k) {
    const Graph g = a_k(k);
    const UdCertificate c = find_ud_certificate(g);
    const bool pendant_pair =
        c.is_ud && c.pair && g.degree(c.pair->first) == 1 && g.degree(c.pair->second) == 1;
    if (!pendant_pair || c.diam != 4) out.fail("A_" + std::to_string(k) + " lacks a 4-UD pendant pair");
  }

  const UdCertificate fig = find_ud_certificate(figure1());
  if (!fig.is_ud || fig.pair != Edge(0, 11) || fig.diam != 11) out.fail("figure1 is not 11-UD at (a1,a12)");

  for (unsigned dim = 1; dim <= 4; ++dim) {
    const Graph q = hypercube(dim);
    const DistanceData d = all_pairs_distances(q);
    const Vertex mask = (1u << dim) - 1;
    std::uint64_t failing = 0;
    std::uint64_t pairs = 0;
    for (Vertex v = 0; v < q.order(); ++v) {
      if (v > (v ^ mask)) continue;
      ++pairs;
      if (!is_ud_pair(q, d, v, v ^ mask)) ++failing;
    }
    if (failing != 0) {
      const auto w = detail::ud_witness(d, 0, mask);
      out.fail("Q" + std::to_string(dim) + ": " + std::to_string(failing) + "/" + std::to_string(pairs) +
               " antipodal pairs not UD (witness for (0," + std::to_string(mask) + "): " +
               (w ? std::to_string(*w) : "-") + ")");
    }
  }
  return out;
}

Outcome growth_chains() {
  Outcome out;
  std::uint64_t gated = 0;
  std::uint64_t instances = 0;
  auto check = [&](const Graph& g, Vertex u, Vertex v, const std::string& name) {
    const DistanceData d = all_pairs_distances(g);
    const InvariantReport r = full_report(g, d);
    ++instances;
    const PendantGrowth grown = grow_at_ud_pair(g, d, r, u, v);
    if (!grown.identities()) out.fail(name + " growth identities");
    const TheoremVerdict t42 = check_T4_2(g, d, r, u, v);
    if (t42.hypothesis_met) ++gated;
    if (t42.counterexample()) out.fail(name + " T4.2 [" + t42.detail_string() + "]");
    for (std::size_t len = 1; len <= 3; ++len) {
      const TheoremVerdict c44 = check_C4_4(g, d, r, u, v, len);
      if (c44.counterexample()) out.fail(name + " C4.4 l=" + std::to_string(len) + " [" + c44.detail_string() + "]");
    }
  };
  for (std::size_t k = 4; k <= 20; ++k) check(path(k), 0, static_cast<Vertex>(k - 1), "P" + std::to_string(k));
  for (std::size_t n = 2; n <= 10; ++n) {
    enumerate_trees(n, [&](const Graph& t) {
      const UdCertificate c = find_ud_certificate(t);
      check(t, c.pair->first, c.pair->second, emit_graph6(t));
    });
  }
  out.info("instances=" + std::to_string(instances) + " gated=" + std::to_string(gated));
  if (gated == 0) out.fail("no gated instance");
  return out;
}

std::vector<std::pair<std::string, Graph>> product_factors() {
  return {{"P2", path(2)},  {"P3", path(3)},  {"P5", path(5)},     {"C4", cycle(4)},
          {"C5", cycle(5)}, {"K3", complete(3)}, {"K5", complete(5)}, {"K1,4", star(5)}};
}

Outcome product_identities() {
  Outcome out;
  std::size_t pairs = 0;
  for (const auto& [gn, g] : product_factors()) {
    for (const auto& [hn, h] : product_factors()) {
      ++pairs;
      const TheoremVerdict v = check_L5_1_L5_3(g, h);
      if (!v.hypothesis_met || !*v.conclusion_held) out.fail(gn + "x" + hn + " [" + v.detail_string() + "]");
    }
  }
  out.info("pairs=" + std::to_string(pairs));
  return out;
}

Outcome product_theorems() {
  Outcome out;
  auto pairs_list = std::vector<std::tuple<std::string, Graph, std::string, Graph>>{};
  for (const auto& [gn, g] : product_factors()) {
    for (const auto& [hn, h] : product_factors()) pairs_list.emplace_back(gn, g, hn, h);
  }
  pairs_list.emplace_back("K6", complete(6), "K6", complete(6));
  pairs_list.emplace_back("K8", complete(8), "K8", complete(8));
  std::uint64_t hits52 = 0;
  std::uint64_t hits54 = 0;
  for (const auto& [gn, g, hn, h] : pairs_list) {
    const TheoremVerdict a = check_T5_2(g, h);
    const TheoremVerdict b = check_T5_4(g, h);
    hits52 += a.hypothesis_met;
    hits54 += b.hypothesis_met;
    if (a.counterexample()) out.fail("T5.2 " + gn + "x" + hn + " [" + a.detail_string() + "]");
    if (b.counterexample()) out.fail("T5.4 " + gn + "x" + hn + " [" + b.detail_string() + "]");
  }
  out.info("T5.2 hits=" + std::to_string(hits52) + " T5.4 hits=" + std::to_string(hits54));
  if (hits52 == 0 || hits54 == 0) out.fail("a product hypothesis was never met");
  return out;
}

Outcome thm29() {
  Outcome out;
  std::size_t cases = 0;
  for (std::size_t n = 9; n <= 12; ++n) {
    for (std::size_t np = 1; np + 2 <= n; ++np) {
      ++cases;
      const TheoremVerdict v = check_T2_9(n, np);
      if (!v.hypothesis_met || !*v.conclusion_held) {
        out.fail("n=" + std::to_string(n) + " n'=" + std::to_string(np) + " [" + v.detail_string() + "]");
      }
    }
  }
  out.info("cases=" + std::to_string(cases));
  return out;
}

Outcome determinism() {
  Outcome out;
  std::uint64_t ignored = 0;
  if (distance_oracle_report(1, &ignored) != distance_oracle_report(8, &ignored)) out.fail("criterion 2 report");
  if (sampled_report(1) != sampled_report(8)) out.fail("criterion 5 report");
  if (tree_report(1, nullptr, nullptr) != tree_report(8, nullptr, nullptr)) out.fail("criterion 6 report");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "closed forms K_n, C_n", 1, closed_forms},
      {2, "BFS vs Floyd-Warshall, connected n<=7", 300, distance_oracle},
      {3, "tree edge-cut Wiener, n<=12", 1, tree_identity},
      {4, "diameter-2 theorems, connected n=3..7", 300, diameter2_sweep},
      {5, "sampled diameter-2 theorems, n=9..12", 600, sampled_sweep},
      {6, "tree theorems, n<=14 and n=9..12", 120, tree_theorems},
      {7, "eccentricity/transmission gap", 300, lemma41},
      {8, "UD suite", 60, ud_suite},
      {9, "pendant growth chains", 60, growth_chains},
      {10, "product identities, 64 pairs", 10, product_identities},
      {11, "product theorems", 60, product_theorems},
      {12, "diameter-2 construction with n' universal vertices", 10, thm29},
      {13, "determinism at 1 and 8 workers", 1200, determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : criteria()) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      outcome.fail("took " + std::to_string(seconds) + "s, budget " + std::to_string(c.budget_seconds) + "s");
    }
    failures += outcome.pass ? 0 : 1;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << time.str()
              << "s) " << outcome.note << std::endl;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
