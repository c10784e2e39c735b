#include <gtest/gtest.h>

#include <atomic>
#include <map>
#include <set>

#include "eccidx/eccidx.hpp"
#include "oracles.hpp"

using namespace eccidx;

TEST(SplitMix64, ReferenceOutputs) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  SplitMix64 a = SplitMix64::stream(42, 7);
  SplitMix64 b = SplitMix64::stream(42, 7);
  SplitMix64 c = SplitMix64::stream(42, 8);
  const std::uint64_t x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
}

TEST(Enumerate, ConnectedLabeledCounts) {
  const std::uint64_t expected[] = {0, 1, 1, 4, 38, 728, 26704, 1866256};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::uint64_t count = 0;
    enumerate_connected_graphs(n, [&](const Graph& g) {
      ++count;
      if (n <= 5) {
        EXPECT_TRUE(is_connected(g));
      }
    });
    EXPECT_EQ(count, expected[n]) << n;
  }
  EXPECT_THROW(enumerate_connected_graphs(9, [](const Graph&) {}), GraphError);
  EXPECT_THROW(enumerate_connected_graphs(0, [](const Graph&) {}), GraphError);
}

TEST(Enumerate, ConnectedGraphsAreDistinctLabelings) {
  std::set<std::string> seen;
  enumerate_connected_graphs(5, [&](const Graph& g) { EXPECT_TRUE(seen.insert(emit_graph6(g)).second); });
  EXPECT_EQ(seen.size(), 728u);
}

TEST(Enumerate, FreeTreeCountsAndNonIsomorphism) {
  const std::uint64_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (std::size_t n = 2; n <= 14; ++n) {
    std::set<std::string> forms;
    std::uint64_t count = 0;
    enumerate_trees(n, [&](const Graph& t) {
      ++count;
      ASSERT_EQ(t.order(), n);
      ASSERT_TRUE(is_tree(t));
      EXPECT_TRUE(forms.insert(oracle::tree_canonical_form(t)).second) << emit_graph6(t);
    });
    EXPECT_EQ(count, expected[n]) << n;
  }
  EXPECT_THROW(enumerate_trees(1, [](const Graph&) {}), GraphError);
  EXPECT_THROW(enumerate_trees(19, [](const Graph&) {}), GraphError);
}

TEST(Enumerate, TreesCoverEveryLabeledTreeClass) {
  // Every labeled tree on 7 vertices (from the connected enumeration) is
  // isomorphic to one generated free tree.
  std::set<std::string> forms;
  enumerate_trees(7, [&](const Graph& t) { forms.insert(oracle::tree_canonical_form(t)); });
  std::set<std::string> labeled;
  enumerate_connected_graphs(7, [&](const Graph& g) {
    if (g.size() == 6) labeled.insert(oracle::tree_canonical_form(g));
  });
  EXPECT_EQ(forms, labeled);
}

TEST(Sampler, DiameterTwoAndReproducible) {
  std::vector<std::string> first;
  sample_diameter2_graphs(9, 1000, 42, [&](const Graph& g) {
    EXPECT_EQ(g.order(), 9u);
    EXPECT_EQ(all_pairs_distances(g).diam, 2);
    first.push_back(emit_graph6(g));
  });
  std::vector<std::string> second;
  sample_diameter2_graphs(9, 1000, 42, [&](const Graph& g) { second.push_back(emit_graph6(g)); });
  EXPECT_EQ(first, second);
  std::vector<std::string> other;
  sample_diameter2_graphs(9, 1000, 43, [&](const Graph& g) { other.push_back(emit_graph6(g)); });
  EXPECT_NE(first, other);
  EXPECT_EQ(emit_graph6(sample_diameter2_graph(9, 42, 17)), first[17]);
}

TEST(Sampler, LargeOrderPath) {
  const Graph g = sample_diameter2_graph(70, 1, 0);
  EXPECT_EQ(g.order(), 70u);
  EXPECT_EQ(all_pairs_distances(g).diam, 2);
}

TEST(Sampler, Errors) {
  EXPECT_THROW(sample_diameter2_graph(2, 0, 0), GraphError);
  EXPECT_THROW(sample_diameter2_graphs(5, 0, 0, [](const Graph&) {}), GraphError);
}

TEST(SweepSpec, ParseAndPrint) {
  const SweepSpec t = parse_sweep_spec("trees:2..12");
  EXPECT_EQ(t.target, SweepSpec::Target::trees);
  EXPECT_EQ(t.n_min, 2u);
  EXPECT_EQ(t.n_max, 12u);
  const SweepSpec d = parse_sweep_spec("diam2:n=10,count=100000,seed=42,filter=min_degree_2");
  EXPECT_EQ(d.mode, SweepSpec::Mode::random);
  EXPECT_EQ(d.sample_count, 100000u);
  EXPECT_EQ(d.seed, 42u);
  EXPECT_EQ(d.filter, "min_degree_2");
  for (const char* text : {"trees:2..12", "connected:3..7", "diam2:n=10,count=100000,seed=42,filter=min_degree_2",
                           "diam2:n=4..6,mode=exhaustive", "connected:5,filter=self_centered"}) {
    EXPECT_EQ(parse_sweep_spec(parse_sweep_spec(text).str()).str(), parse_sweep_spec(text).str()) << text;
  }
}

TEST(SweepSpec, Errors) {
  for (const char* text : {"", "trees", "forest:2..5", "trees:1..5", "trees:2..19", "connected:9", "connected:5..3",
                           "diam2:n=9", "diam2:n=2,count=5", "connected:3,filter=bogus", "trees:x",
                           "connected:3,mode=random", "diam2:n=9,count=5,color=red"}) {
    EXPECT_THROW(parse_sweep_spec(text), ParseError) << text;
  }
}

namespace {

std::multiset<std::string> sweep_multiset(const SweepSpec& spec, unsigned workers, SweepSummary* summary) {
  std::vector<std::multiset<std::string>> per(workers);
  *summary = run_sweep(spec, [&](const Graph& g, unsigned w) { per[w].insert(emit_graph6(g)); }, workers);
  std::multiset<std::string> all;
  for (auto& p : per) all.merge(p);
  return all;
}

}  // namespace

TEST(RunSweep, WorkerCountDoesNotChangeVisits) {
  for (const char* text : {"connected:1..6", "trees:2..12", "diam2:n=7..8,count=300,seed=5",
                           "diam2:n=3..6,mode=exhaustive", "connected:5,filter=self_centered"}) {
    const SweepSpec spec = parse_sweep_spec(text);
    SweepSummary one;
    SweepSummary many;
    const auto a = sweep_multiset(spec, 1, &one);
    const auto b = sweep_multiset(spec, 5, &many);
    EXPECT_EQ(a, b) << text;
    EXPECT_EQ(one, many) << text;
    EXPECT_EQ(one.visited, a.size());
  }
}

TEST(RunSweep, FiltersAndCounts) {
  SweepSummary s = run_sweep(parse_sweep_spec("trees:2..12"), [](const Graph&, unsigned) {});
  EXPECT_EQ(s.visited, 986u);
  s = run_sweep(parse_sweep_spec("connected:4,filter=diameter2"), [](const Graph& g, unsigned) {
    EXPECT_EQ(all_pairs_distances(g).diam, 2);
  });
  EXPECT_EQ(s.visited + s.filtered, 38u);
  std::uint64_t exhaustive = 0;
  enumerate_connected_graphs(5, [&](const Graph& g) { exhaustive += all_pairs_distances(g).diam == 2; });
  s = run_sweep(parse_sweep_spec("diam2:n=5,mode=exhaustive"), [](const Graph&, unsigned) {});
  EXPECT_EQ(s.visited, exhaustive);
}

TEST(RunSweep, VisitorFailureReportsSmallestGraph) {
  const SweepSpec spec = parse_sweep_spec("trees:5..8");
  for (unsigned workers : {1u, 4u}) {
    try {
      run_sweep(
          spec,
          [](const Graph& g, unsigned) {
            if (g.order() >= 6) throw std::runtime_error("boom");
          },
          workers);
      FAIL() << "expected SweepError";
    } catch (const SweepError& e) {
      EXPECT_EQ(parse_graph6(e.graph6()).order(), 6u);
    }
  }
}
