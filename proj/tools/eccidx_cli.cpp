// eccidx: eccentricity-index reports, families, sweeps and theorem checks.
//
// Exit codes: 0 success, 1 counterexample found, 2 usage, parse or
// per-graph error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "eccidx/eccidx.hpp"
#include "eccidx/io.hpp"

namespace {

using namespace eccidx;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

struct Config {
  std::string format = "csv";
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;
  std::string output;
  bool verbose = false;

  std::vector<std::string> inputs;
  std::string family;
  std::string sweep;
  std::string theorems;

  bool json() const { return format == "json"; }
};

struct InputGraph {
  std::string source;
  std::size_t line = 0;
  Graph graph;
};

struct InputError {
  std::string source;
  std::size_t line = 0;
  std::string message;
};

using InputItem = std::variant<InputGraph, InputError>;

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_content_line(in, line, line_no)) return false;
  return line.find_first_of(" \t") != std::string::npos;
}

void read_graph6_lines(const std::string& source, const std::string& text, std::vector<InputItem>& out) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (detail::next_content_line(in, line, line_no)) {
    try {
      out.emplace_back(InputGraph{source, line_no, parse_graph6(line)});
    } catch (const ParseError& e) {
      out.emplace_back(InputError{source, line_no, e.what()});
    }
  }
}

void read_edge_lists(const std::string& source, const std::string& text, std::vector<InputItem>& out) {
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (;;) {
    Graph g;
    const std::size_t start = line_no + 1;
    try {
      if (!read_edge_list(in, g, line_no)) return;
    } catch (const ParseError& e) {
      // The stream position is unknown after a malformed edge list, so the
      // rest of this source is skipped.
      out.emplace_back(InputError{source, line_no, e.what()});
      return;
    }
    out.emplace_back(InputGraph{source, start, std::move(g)});
  }
}

/// Graphs from every input path ("-" or no paths means stdin), in order.
std::vector<InputItem> read_inputs(const std::vector<std::string>& paths) {
  std::vector<std::string> sources = paths.empty() ? std::vector<std::string>{"-"} : paths;
  std::vector<InputItem> items;
  for (const auto& path : sources) {
    std::ostringstream buffer;
    if (path == "-") {
      buffer << std::cin.rdbuf();
    } else {
      std::ifstream file(path);
      if (!file) {
        items.emplace_back(InputError{path, 0, "cannot open file"});
        continue;
      }
      buffer << file.rdbuf();
    }
    const std::string text = buffer.str();
    const std::string name = path == "-" ? "<stdin>" : path;
    if (looks_like_edge_list(text)) {
      read_edge_lists(name, text, items);
    } else {
      read_graph6_lines(name, text, items);
    }
  }
  return items;
}

void report_error(const std::string& source, std::size_t line, const std::string& message) {
  std::cerr << "error: " << source << ":" << line << ": " << message << "\n";
}

nlohmann::ordered_json error_json(const std::string& source, std::size_t line, const std::string& message) {
  return {{"source", source}, {"line", line}, {"error", message}};
}

int cmd_invariants(const Config& cfg, std::ostream& out) {
  int status = kExitOk;
  if (!cfg.json()) out << kInvariantCsvHeader << "\n";
  for (const auto& item : read_inputs(cfg.inputs)) {
    if (const auto* err = std::get_if<InputError>(&item)) {
      report_error(err->source, err->line, err->message);
      if (cfg.json()) out << error_json(err->source, err->line, err->message).dump() << "\n";
      status = kExitError;
      continue;
    }
    const auto& in = std::get<InputGraph>(item);
    try {
      const InvariantReport r = full_report(in.graph);
      if (cfg.json()) {
        out << to_json(r).dump() << "\n";
      } else {
        out << to_csv_row(r) << "\n";
      }
    } catch (const GraphError& e) {
      report_error(in.source, in.line, e.what());
      if (cfg.json()) out << error_json(in.source, in.line, e.what()).dump() << "\n";
      status = kExitError;
    }
  }
  return status;
}

int cmd_ud(const Config& cfg, std::ostream& out) {
  int status = kExitOk;
  if (!cfg.json()) out << "is_ud,u,v,diam,failures\n";
  for (const auto& item : read_inputs(cfg.inputs)) {
    if (const auto* err = std::get_if<InputError>(&item)) {
      report_error(err->source, err->line, err->message);
      if (cfg.json()) out << error_json(err->source, err->line, err->message).dump() << "\n";
      status = kExitError;
      continue;
    }
    const auto& in = std::get<InputGraph>(item);
    try {
      const UdCertificate c = find_ud_certificate(in.graph);
      if (cfg.json()) {
        out << to_json(c).dump() << "\n";
      } else {
        out << (c.is_ud ? "true" : "false") << ",";
        if (c.pair) {
          out << c.pair->first << "," << c.pair->second;
        } else {
          out << ",";
        }
        out << "," << c.diam << "," << c.failures.size() << "\n";
      }
    } catch (const GraphError& e) {
      report_error(in.source, in.line, e.what());
      if (cfg.json()) out << error_json(in.source, in.line, e.what()).dump() << "\n";
      status = kExitError;
    }
  }
  return status;
}

int cmd_family(const Config& cfg, std::ostream& out) {
  const FamilySpec spec = parse_family_spec(cfg.family);
  const Graph g = build_family(spec);
  if (cfg.json()) {
    out << nlohmann::ordered_json{{"spec", spec.str()}, {"n", g.order()}, {"m", g.size()},
                                  {"graph6", emit_graph6(g)}}
               .dump()
        << "\n";
  } else {
    out << emit_graph6(g) << "\n";
  }
  if (cfg.verbose) std::cerr << spec.str() << ": n=" << g.order() << " m=" << g.size() << "\n";
  return kExitOk;
}

SweepSpec sweep_from(const Config& cfg, const std::string& text) {
  SweepSpec spec = parse_sweep_spec(text);
  if (!spec.seed && cfg.seed) spec.seed = cfg.seed;
  return spec;
}

void print_summary(const Config& cfg, const SweepSpec& spec, const SweepSummary& s) {
  if (!cfg.verbose) return;
  std::cerr << spec.str() << ": visited=" << s.visited << " filtered=" << s.filtered << " elapsed=" << s.elapsed_seconds
            << "s\n";
}

int cmd_enumerate(const Config& cfg, std::ostream& out) {
  const SweepSpec spec = sweep_from(cfg, cfg.sweep);
  // Streamed from a single worker so the output order is the generation order.
  const SweepSummary s = run_sweep(spec, [&](const Graph& g, unsigned) {
    if (cfg.json()) {
      out << nlohmann::ordered_json{{"graph6", emit_graph6(g)}}.dump() << "\n";
    } else {
      out << emit_graph6(g) << "\n";
    }
  });
  print_summary(cfg, spec, s);
  return kExitOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const SweepSpec spec = sweep_from(cfg, cfg.sweep);
  const HuntResult result = hunt(spec, split_list(cfg.theorems), cfg.workers);
  if (cfg.json()) {
    nlohmann::ordered_json j;
    j["sweep"] = spec.str();
    j["visited"] = result.summary.visited;
    j["filtered"] = result.summary.filtered;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : result.reports) j["reports"].push_back(to_json(r, cfg.verbose));
    out << j.dump(2) << "\n";
  } else {
    out << to_csv(result.reports);
    for (const auto& r : result.reports) {
      for (const auto& c : r.counterexamples) {
        std::cerr << "counterexample " << c.theorem_id << " " << c.graph_id << " " << c.detail_string() << "\n";
      }
    }
  }
  print_summary(cfg, spec, result.summary);
  return result.counterexamples() > 0 ? kExitCounterexample : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Eccentricity-based topological indices: reports, families, sweeps and theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", cfg.workers, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", cfg.seed, "Seed for random sweeps that do not carry one");
  app.add_option("--output", cfg.output, "Write output to PATH instead of stdout");
  app.add_flag("--verbose", cfg.verbose, "Summaries on stderr, extra detail in JSON");

  auto* invariants = app.add_subcommand("invariants", "Invariant report per input graph (graph6 or edge list)");
  invariants->add_option("files", cfg.inputs, "Input files; stdin if none");
  auto* ud = app.add_subcommand("ud", "UD certificate per input graph");
  ud->add_option("files", cfg.inputs, "Input files; stdin if none");
  auto* family = app.add_subcommand("family", "Build a named family member and print it as graph6");
  family->add_option("spec", cfg.family, "Family spec, e.g. path:7, ak:3, cartesian(path:3,cycle:5)")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Stream a sweep as graph6");
  enumerate->add_option("sweep", cfg.sweep, "Sweep spec, e.g. trees:2..12")->required();
  auto* verify = app.add_subcommand("verify", "Check theorems over a sweep");
  verify->add_option("--sweep", cfg.sweep, "Sweep spec")->required();
  verify->add_option("--theorems", cfg.theorems, "Comma-separated theorem ids, or all-unary")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.output << " for writing\n";
      return kExitError;
    }
    out = &file;
  }

  try {
    int status = kExitOk;
    if (invariants->parsed()) status = cmd_invariants(cfg, *out);
    if (ud->parsed()) status = cmd_ud(cfg, *out);
    if (family->parsed()) status = cmd_family(cfg, *out);
    if (enumerate->parsed()) status = cmd_enumerate(cfg, *out);
    if (verify->parsed()) status = cmd_verify(cfg, *out);
    out->flush();
    return status;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const SweepError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
