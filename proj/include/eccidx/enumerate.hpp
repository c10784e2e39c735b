#pragma once

// Graph sweeps: labeled connected graphs, unlabeled free trees, and seeded
// samples of diameter-2 graphs, with a worker-partitioned driver whose merged
// results do not depend on the worker count.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "eccidx/distance.hpp"
#include "eccidx/graph.hpp"
#include "eccidx/graph6.hpp"

namespace eccidx {

// ---------------------------------------------------------------------------
// PRNG

/// SplitMix64 (Steele, Lea, Flood). State advances by the golden-ratio
/// increment; output is the standard 30/27/31 xor-shift-multiply finalizer.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Independent stream for item `index` under `seed`.
  static constexpr SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix(seed ^ mix(index + 1)));
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Labeled connected graphs

inline constexpr std::size_t kMaxExhaustiveConnected = 8;

namespace detail {

inline std::vector<Edge> upper_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

inline bool masks_connected(std::span<const std::uint64_t> adj) {
  const std::size_t n = adj.size();
  if (n <= 1) return true;
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
      next |= adj[static_cast<std::size_t>(__builtin_ctzll(bits))];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

/// Connected with diameter exactly 2 (n <= 64).
inline bool masks_diameter2(std::span<const std::uint64_t> adj) {
  const std::size_t n = adj.size();
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  bool complete = true;
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t self = 1ULL << v;
    if ((adj[v] | self) != all) complete = false;
    std::uint64_t reach = adj[v] | self;
    for (std::uint64_t bits = adj[v]; bits != 0; bits &= bits - 1) {
      reach |= adj[static_cast<std::size_t>(__builtin_ctzll(bits))];
    }
    if (reach != all) return false;
  }
  return !complete && n >= 2;
}

/// Calls visit(graph, subset_index) for each connected graph whose edge
/// subset index lies in [begin, end). Bit i of the index selects pair i of
/// upper_pairs(n).
template <typename Visit>
void visit_connected_range(std::size_t n, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const auto pairs = upper_pairs(n);
  std::array<std::uint64_t, kMaxExhaustiveConnected> adj{};
  const std::span<std::uint64_t> masks(adj.data(), n);
  for (std::uint64_t subset = begin; subset < end; ++subset) {
    std::fill(masks.begin(), masks.end(), 0);
    for (std::uint64_t bits = subset; bits != 0; bits &= bits - 1) {
      const auto& [u, v] = pairs[static_cast<std::size_t>(__builtin_ctzll(bits))];
      adj[u] |= 1ULL << v;
      adj[v] |= 1ULL << u;
    }
    if (!masks_connected(masks)) continue;
    visit(Graph::from_adjacency_masks(masks), subset);
  }
}

inline std::uint64_t subset_count(std::size_t n) { return 1ULL << (n * (n - (n > 0 ? 1 : 0)) / 2); }

}  // namespace detail

/// Every connected graph on n labeled vertices, once each. 1 <= n <= 8;
/// n = 8 walks 2^28 subsets and is slow.
template <typename Visit>
void enumerate_connected_graphs(std::size_t n, Visit&& visit) {
  if (n < 1 || n > kMaxExhaustiveConnected) throw GraphError("exhaustive bound exceeded");
  detail::visit_connected_range(n, 0, detail::subset_count(n),
                                [&](const Graph& g, std::uint64_t) { visit(g); });
}

// ---------------------------------------------------------------------------
// Free trees

inline constexpr std::size_t kMaxTreeOrder = 18;

/// Successor generation over canonical level sequences of free trees
/// (Wright, Richmond, Odlyzko, McKay). Each sequence lists vertex depths in
/// preorder of a rooted representative; consecutive sequences are distinct
/// unlabeled free trees.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n) {
    if (n < 2 || n > kMaxTreeOrder) throw GraphError("enumerate_trees: n must be in 2..18");
    Layout layout;
    for (int i = 0; i <= static_cast<int>(n / 2); ++i) layout.push_back(i);
    for (int i = 1; i < static_cast<int>((n + 1) / 2); ++i) layout.push_back(i);
    pending_ = std::move(layout);
  }

  /// Advances to the next tree; false when exhausted.
  bool next() {
    if (started_ && current_) pending_ = next_rooted(*current_, std::nullopt);
    started_ = true;
    current_.reset();
    if (!pending_) return false;
    current_ = next_valid(*pending_);
    pending_.reset();
    return current_.has_value();
  }

  const std::vector<int>& level_sequence() const { return *current_; }

  Graph graph() const { return level_sequence_to_graph(*current_); }

  static Graph level_sequence_to_graph(const std::vector<int>& levels) {
    std::vector<Edge> edges;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (!stack.empty()) {
        while (levels[stack.back()] >= levels[i]) stack.pop_back();
        edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
      }
      stack.push_back(i);
    }
    return Graph::from_edge_list(levels.size(), edges);
  }

 private:
  using Layout = std::vector<int>;

  static std::optional<Layout> next_rooted(const Layout& pred, std::optional<std::size_t> start) {
    std::size_t p = 0;
    if (start) {
      p = *start;
    } else {
      p = pred.size() - 1;
      while (pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    std::size_t q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout out = pred;
    for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
    return out;
  }

  // Left subtree (depths shifted up by one) and the remainder rooted at 0.
  static std::pair<Layout, Layout> split(const Layout& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      if (layout[i] == 1) {
        if (one_found) {
          m = i;
          break;
        }
        one_found = true;
      }
    }
    Layout left;
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    Layout rest{0};
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {std::move(left), std::move(rest)};
  }

  // Skips rooted sequences that are not canonical for their free tree.
  static std::optional<Layout> next_valid(Layout candidate) {
    while (true) {
      auto [left, rest] = split(candidate);
      const int left_height = *std::max_element(left.begin(), left.end());
      const int rest_height = *std::max_element(rest.begin(), rest.end());
      bool valid = rest_height >= left_height;
      if (valid && rest_height == left_height) {
        if (left.size() > rest.size()) {
          valid = false;
        } else if (left.size() == rest.size() && left > rest) {
          valid = false;
        }
      }
      if (valid) return candidate;
      const std::size_t p = left.size();
      auto successor = next_rooted(candidate, p);
      if (!successor) return std::nullopt;
      if (candidate[p] > 2) {
        auto [new_left, new_rest] = split(*successor);
        const int height = *std::max_element(new_left.begin(), new_left.end());
        const std::size_t len = static_cast<std::size_t>(height) + 1;
        for (std::size_t i = 0; i < len; ++i) {
          (*successor)[successor->size() - len + i] = static_cast<int>(i) + 1;
        }
      }
      candidate = std::move(*successor);
    }
  }

  bool started_ = false;
  std::optional<Layout> pending_;
  std::optional<Layout> current_;
};

/// Every unlabeled free tree on n vertices exactly once, 2 <= n <= 18.
template <typename Visit>
void enumerate_trees(std::size_t n, Visit&& visit) {
  FreeTreeGenerator gen(n);
  while (gen.next()) visit(gen.graph());
}

// ---------------------------------------------------------------------------
// Random diameter-2 graphs

class SamplingStalled : public std::runtime_error {
 public:
  SamplingStalled() : std::runtime_error("sampling stalled") {}
};

inline constexpr std::uint64_t kMaxConsecutiveRejections = 1'000'000;
inline constexpr std::array<unsigned, 3> kSamplingTenths = {3, 5, 7};

namespace detail {

inline bool graph_has_diameter2(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return all_pairs_distances(g).diam == 2;
}

}  // namespace detail

/// Sample `index` of the seeded diameter-2 stream on n vertices. Attempt j
/// draws G(n, p) with p = 0.3, 0.5, 0.7 for j = 0, 1, 2 (mod 3): each pair
/// u < v in lexicographic order is an edge iff the next 64-bit draw is below
/// floor(p * 2^64). The first attempt with diameter 2 is returned.
inline Graph sample_diameter2_graph(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  if (n < 3) throw GraphError("sample_diameter2_graphs: n must be >= 3");
  SplitMix64 rng = SplitMix64::stream(seed, index);
  std::array<std::uint64_t, 3> thresholds{};
  for (std::size_t i = 0; i < 3; ++i) {
    thresholds[i] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(kSamplingTenths[i]) << 64) / 10);
  }
  const auto pairs = detail::upper_pairs(n);
  std::vector<std::uint64_t> masks(n <= 64 ? n : 0);
  std::vector<Edge> edges;
  for (std::uint64_t attempt = 0; attempt < kMaxConsecutiveRejections; ++attempt) {
    const std::uint64_t threshold = thresholds[attempt % 3];
    if (n <= 64) {
      std::fill(masks.begin(), masks.end(), 0);
      for (const auto& [u, v] : pairs) {
        if (rng.next() < threshold) {
          masks[u] |= 1ULL << v;
          masks[v] |= 1ULL << u;
        }
      }
      if (detail::masks_diameter2(masks)) return Graph::from_adjacency_masks(masks);
    } else {
      edges.clear();
      for (const auto& e : pairs) {
        if (rng.next() < threshold) edges.push_back(e);
      }
      Graph g = Graph::from_edge_list(n, edges);
      if (detail::graph_has_diameter2(g)) return g;
    }
  }
  throw SamplingStalled();
}

template <typename Visit>
void sample_diameter2_graphs(std::size_t n, std::uint64_t count, std::uint64_t seed, Visit&& visit) {
  if (count < 1) throw GraphError("sample_diameter2_graphs: count must be >= 1");
  for (std::uint64_t i = 0; i < count; ++i) visit(sample_diameter2_graph(n, seed, i));
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepSpec {
  enum class Target { connected_graphs, trees, diameter2_graphs };
  enum class Mode { exhaustive, random };

  Target target = Target::trees;
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  Mode mode = Mode::exhaustive;
  std::uint64_t sample_count = 0;
  std::optional<std::uint64_t> seed;
  std::string filter;  // "", self_centered, non_self_centered, min_degree_2, diameter2

  std::string str() const;
};

inline constexpr std::string_view kSweepFilters[] = {"self_centered", "non_self_centered",
                                                     "min_degree_2", "diameter2"};

inline void validate(const SweepSpec& spec) {
  auto bad = [](const std::string& why) { throw ParseError("sweep spec: " + why); };
  if (spec.n_min > spec.n_max) bad("n_min > n_max");
  if (!spec.filter.empty() &&
      std::find(std::begin(kSweepFilters), std::end(kSweepFilters), spec.filter) == std::end(kSweepFilters)) {
    bad("unknown filter \"" + spec.filter + "\"");
  }
  using T = SweepSpec::Target;
  const bool random = spec.mode == SweepSpec::Mode::random;
  if (spec.target == T::trees) {
    if (random) bad("trees are exhaustive only");
    if (spec.n_min < 2 || spec.n_max > kMaxTreeOrder) bad("exhaustive trees need 2 <= n <= 18");
  } else if (spec.target == T::connected_graphs) {
    if (random) bad("connected graphs are exhaustive only");
    if (spec.n_min < 1 || spec.n_max > kMaxExhaustiveConnected) bad("exhaustive connected graphs need 1 <= n <= 8");
  } else if (random) {
    if (spec.n_min < 3) bad("diameter-2 sampling needs n >= 3");
    if (spec.sample_count < 1) bad("random mode needs count >= 1");
  } else {
    if (spec.n_min < 1 || spec.n_max > kMaxExhaustiveConnected) bad("exhaustive diameter-2 graphs need n <= 8");
  }
}

/// Text forms: "trees:2..12", "connected:3..7", "connected:5,filter=self_centered",
/// "diam2:n=10,count=100000,seed=42,filter=min_degree_2", "diam2:n=9..12,count=10",
/// "diam2:4..6,mode=exhaustive".
inline SweepSpec parse_sweep_spec(std::string_view text) {
  auto bad = [&](const std::string& why) -> void {
    throw ParseError("sweep spec \"" + std::string(text) + "\": " + why);
  };
  SweepSpec spec;
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  if (kind == "trees" || kind == "tree") {
    spec.target = SweepSpec::Target::trees;
  } else if (kind == "connected") {
    spec.target = SweepSpec::Target::connected_graphs;
  } else if (kind == "diam2" || kind == "diameter2") {
    spec.target = SweepSpec::Target::diameter2_graphs;
    spec.mode = SweepSpec::Mode::random;
  } else {
    bad("unknown sweep target");
  }
  if (colon == std::string_view::npos) bad("missing ':'");

  auto parse_uint = [&](std::string_view s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
      bad("expected a non-negative integer, got \"" + std::string(s) + "\"");
    }
    return std::stoull(std::string(s));
  };
  bool have_range = false;
  auto parse_range = [&](std::string_view s) {
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
      spec.n_min = spec.n_max = parse_uint(s);
    } else {
      spec.n_min = parse_uint(s.substr(0, dots));
      spec.n_max = parse_uint(s.substr(dots + 2));
    }
    have_range = true;
  };

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      parse_range(item);
      continue;
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      parse_range(value);
    } else if (key == "count") {
      spec.sample_count = parse_uint(value);
    } else if (key == "seed") {
      spec.seed = parse_uint(value);
    } else if (key == "filter") {
      spec.filter = std::string(value);
    } else if (key == "mode") {
      if (value == "exhaustive") {
        spec.mode = SweepSpec::Mode::exhaustive;
      } else if (value == "random") {
        spec.mode = SweepSpec::Mode::random;
      } else {
        bad("unknown mode");
      }
    } else {
      bad("unknown key \"" + std::string(key) + "\"");
    }
  }
  if (!have_range) bad("missing vertex-count range");
  validate(spec);
  return spec;
}

inline std::string SweepSpec::str() const {
  std::string out;
  switch (target) {
    case Target::trees:
      out = "trees:";
      break;
    case Target::connected_graphs:
      out = "connected:";
      break;
    case Target::diameter2_graphs:
      out = "diam2:n=";
      break;
  }
  out += n_min == n_max ? std::to_string(n_min) : std::to_string(n_min) + ".." + std::to_string(n_max);
  if (target == Target::diameter2_graphs) {
    if (mode == Mode::random) {
      out += ",count=" + std::to_string(sample_count);
      if (seed) out += ",seed=" + std::to_string(*seed);
    } else {
      out += ",mode=exhaustive";
    }
  }
  if (!filter.empty()) out += ",filter=" + filter;
  return out;
}

struct SweepSummary {
  std::uint64_t visited = 0;
  std::uint64_t filtered = 0;  // generated but rejected by the filter
  double elapsed_seconds = 0;

  friend bool operator==(const SweepSummary& a, const SweepSummary& b) {
    return a.visited == b.visited && a.filtered == b.filtered;
  }
};

/// A visitor failure, tagged with the offending graph.
class SweepError : public std::runtime_error {
 public:
  SweepError(std::string graph6, const std::string& message)
      : std::runtime_error("visitor failed on " + graph6 + ": " + message), graph6_(std::move(graph6)) {}
  const std::string& graph6() const noexcept { return graph6_; }

 private:
  std::string graph6_;
};

namespace detail {

inline bool passes_filter(const std::string& filter, const Graph& g) {
  if (filter.empty()) return true;
  if (filter == "min_degree_2") return g.min_degree() >= 2;
  const DistanceData d = all_pairs_distances(g);
  if (filter == "self_centered") return d.diam == d.rad;
  if (filter == "non_self_centered") return d.diam != d.rad;
  if (filter == "diameter2") return d.diam == 2;
  throw ParseError("unknown filter \"" + filter + "\"");
}

inline constexpr std::uint64_t kConnectedBlock = 1ULL << 12;

}  // namespace detail

/// Applies visitor(graph, worker) to every graph of the sweep using
/// `workers` threads. Work is dealt round-robin by a deterministic index
/// (subset blocks, tree ordinal, sample index), so the multiset of
/// (graph, index) visits is independent of the worker count; the visitor
/// must be thread-safe or keep per-worker state keyed by `worker`.
template <typename Visitor>
SweepSummary run_sweep(const SweepSpec& spec, Visitor&& visitor, unsigned workers = 1) {
  validate(spec);
  if (workers < 1) workers = 1;
  const auto start = std::chrono::steady_clock::now();

  struct Failure {
    std::size_t n;
    std::uint64_t index;
    std::string graph6;
    std::string message;
  };
  std::mutex failure_mutex;
  std::optional<Failure> failure;
  std::atomic<bool> stop{false};
  std::vector<SweepSummary> partial(workers);

  auto worker_body = [&](unsigned w) {
    SweepSummary& local = partial[w];
    auto handle = [&](const Graph& g, std::size_t n, std::uint64_t index) {
      if (stop.load(std::memory_order_relaxed)) return;
      try {
        if (spec.target == SweepSpec::Target::diameter2_graphs && spec.mode == SweepSpec::Mode::exhaustive &&
            !detail::graph_has_diameter2(g)) {
          ++local.filtered;
          return;
        }
        if (!detail::passes_filter(spec.filter, g)) {
          ++local.filtered;
          return;
        }
        ++local.visited;
        visitor(g, w);
      } catch (const std::exception& e) {
        std::lock_guard lock(failure_mutex);
        if (!failure || std::tie(n, index) < std::tie(failure->n, failure->index)) {
          failure = Failure{n, index, emit_graph6(g), e.what()};
        }
        stop = true;
      }
    };

    for (std::size_t n = spec.n_min; n <= spec.n_max && !stop; ++n) {
      switch (spec.target) {
        case SweepSpec::Target::connected_graphs:
        case SweepSpec::Target::diameter2_graphs:
          if (spec.mode == SweepSpec::Mode::exhaustive) {
            const std::uint64_t total = detail::subset_count(n);
            for (std::uint64_t block = w; block * detail::kConnectedBlock < total && !stop; block += workers) {
              const std::uint64_t lo = block * detail::kConnectedBlock;
              const std::uint64_t hi = std::min(total, lo + detail::kConnectedBlock);
              detail::visit_connected_range(n, lo, hi,
                                            [&](const Graph& g, std::uint64_t subset) { handle(g, n, subset); });
            }
          } else {
            const std::uint64_t seed = spec.seed.value_or(0);
            for (std::uint64_t i = w; i < spec.sample_count && !stop; i += workers) {
              handle(sample_diameter2_graph(n, seed, i), n, i);
            }
          }
          break;
        case SweepSpec::Target::trees: {
          FreeTreeGenerator gen(n);
          for (std::uint64_t i = 0; gen.next() && !stop; ++i) {
            if (i % workers == w) handle(gen.graph(), n, i);
          }
          break;
        }
      }
    }
  };

  std::exception_ptr fatal;
  std::mutex fatal_mutex;
  if (workers == 1) {
    worker_body(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          worker_body(w);
        } catch (...) {
          std::lock_guard lock(fatal_mutex);
          if (!fatal) fatal = std::current_exception();
          stop = true;
        }
      });
    }
  }
  if (fatal) std::rethrow_exception(fatal);
  if (failure) throw SweepError(failure->graph6, failure->message);

  SweepSummary total;
  for (const auto& p : partial) {
    total.visited += p.visited;
    total.filtered += p.filtered;
  }
  total.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace eccidx
