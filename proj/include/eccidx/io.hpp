#pragma once

// CSV and JSON forms of reports, certificates and verdicts.

#include <string>
#include <vector>

#include "eccidx/invariants.hpp"
#include "eccidx/theorems.hpp"
#include "eccidx/ud.hpp"
#include "json.hpp"

namespace eccidx {

inline constexpr const char* kInvariantCsvHeader =
    "n,m,diam,rad,W,E1,E2,totecc,xic,nprime,avd_num,avd_den,avt_num,avt_den,self_centered";

inline std::string to_csv_row(const InvariantReport& r) {
  std::string out;
  for (std::int64_t value : {r.n, r.m, r.diam, r.rad, r.wiener, r.e1, r.e2, r.total_ecc, r.ecc_connectivity,
                             r.n_universal, r.avd.num(), r.avd.den(), r.avt.num(), r.avt.den()}) {
    out += std::to_string(value);
    out += ',';
  }
  out += r.self_centered ? "true" : "false";
  return out;
}

inline nlohmann::ordered_json to_json(const InvariantReport& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"diam", r.diam},
          {"rad", r.rad},
          {"W", r.wiener},
          {"E1", r.e1},
          {"E2", r.e2},
          {"totecc", r.total_ecc},
          {"xic", r.ecc_connectivity},
          {"nprime", r.n_universal},
          {"avd_num", r.avd.num()},
          {"avd_den", r.avd.den()},
          {"avt_num", r.avt.num()},
          {"avt_den", r.avt.den()},
          {"self_centered", r.self_centered}};
}

inline nlohmann::ordered_json to_json(const UdCertificate& c) {
  nlohmann::ordered_json j;
  j["is_ud"] = c.is_ud;
  j["pair"] = c.pair ? nlohmann::ordered_json::array({c.pair->first, c.pair->second}) : nlohmann::ordered_json();
  j["diam"] = c.diam;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : c.failures) {
    j["failures"].push_back({{"pair", {f.pair.first, f.pair.second}}, {"witness", f.witness}});
  }
  return j;
}

inline nlohmann::ordered_json to_json(const TheoremVerdict& v) {
  nlohmann::ordered_json j;
  j["theorem"] = v.theorem_id;
  j["graph"] = v.graph_id;
  j["hypothesis_met"] = v.hypothesis_met;
  j["conclusion_held"] = v.conclusion_held ? nlohmann::ordered_json(*v.conclusion_held) : nlohmann::ordered_json();
  j["equality"] = v.equality;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
  for (const auto& q : v.detail) detail[q.name] = q.value.str();
  j["detail"] = std::move(detail);
  return j;
}

inline constexpr const char* kCheckReportCsvHeader =
    "theorem,graphs_visited,hypothesis_hits,counterexamples,equality_cases,counterexample_graphs";

/// One row per theorem; counterexample graph6 strings are ';'-joined (neither
/// ',' nor ';' can occur in graph6).
inline std::string to_csv_row(const CheckReport& r) {
  std::string graphs;
  for (const auto& c : r.counterexamples) {
    if (!graphs.empty()) graphs += ';';
    graphs += c.graph_id;
  }
  return r.theorem_id + "," + std::to_string(r.graphs_visited) + "," + std::to_string(r.hypothesis_hits) + "," +
         std::to_string(r.counterexample_count) + "," + std::to_string(r.equality_count) + "," + graphs;
}

inline nlohmann::ordered_json to_json(const CheckReport& r, bool verbose) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem_id;
  j["graphs_visited"] = r.graphs_visited;
  j["hypothesis_hits"] = r.hypothesis_hits;
  j["counterexample_count"] = r.counterexample_count;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back(to_json(c));
  j["equality_count"] = r.equality_count;
  if (verbose) j["equality_cases"] = r.equality_cases;
  return j;
}

inline std::string to_csv(const std::vector<CheckReport>& reports) {
  std::string out = std::string(kCheckReportCsvHeader) + "\n";
  for (const auto& r : reports) out += to_csv_row(r) + "\n";
  return out;
}

}  // namespace eccidx
