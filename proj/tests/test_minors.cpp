#include <gtest/gtest.h>

#include <random>
#include <set>

#include "apexkit/apex.hpp"
#include "apexkit/canon.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/graph6.hpp"
#include "apexkit/minors.hpp"
#include "apexkit/planarity.hpp"
#include "oracles.hpp"

using namespace apexkit;

TEST(Minors, Basics) {
  EXPECT_TRUE(has_minor(Graph::complete(6), Graph::complete(5)));
  EXPECT_TRUE(has_minor(Graph::petersen(), Graph::complete(5)));
  EXPECT_TRUE(has_minor(Graph::petersen(), Graph::complete_bipartite(3, 3)));
  EXPECT_FALSE(has_minor(Graph::complete_bipartite(3, 3), Graph::complete(5)));
  EXPECT_FALSE(has_minor(Graph::cycle(8), Graph::complete(4)));
  EXPECT_TRUE(has_minor(Graph::cycle(8), Graph::cycle(3)));
  EXPECT_TRUE(has_minor(Graph::complete(4), Graph(2)));
  EXPECT_FALSE(has_minor(Graph(3), Graph::path(2)));
  // larger pattern than host
  EXPECT_FALSE(has_minor(Graph::complete(4), Graph::complete(5)));
}

TEST(Minors, CycleRank) {
  EXPECT_EQ(cycle_rank(Graph::complete(5)), 6);
  EXPECT_EQ(cycle_rank(Graph::path(5)), 0);
  EXPECT_EQ(cycle_rank(Graph::disjoint_union(Graph::complete(2), Graph::complete(2))), 0);
  EXPECT_EQ(cycle_rank(Graph::petersen()), 6);
}

// Property: has_minor agrees with the exhaustive deletion/contraction closure, n <= 7.
TEST(Minors, AgreesWithExhaustiveClosure) {
  std::vector<Graph> patterns;
  for (int n = 1; n <= 5; ++n) {
    // every graph on n vertices, one per class
    std::set<std::uint64_t> keys;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph h(n);
      int k = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
          if ((mask >> k) & 1) h.add_edge(u, v);
      if (keys.insert(oracle::brute_key(h)).second) patterns.push_back(h);
    }
  }
  patterns.push_back(Graph::complete_bipartite(3, 3));
  patterns.push_back(Graph::complete(6));
  patterns.push_back(Graph::cycle(7));
  ASSERT_EQ(patterns.size(), 1u + 2 + 4 + 11 + 34 + 3);

  std::mt19937_64 rng(4242);
  int positives = 0, checked = 0;
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const Graph g = oracle::random_graph(rng, n, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    const auto minors = oracle::brute_minor_keys(g);
    for (const Graph& h : patterns) {
      if (h.order() > g.order()) continue;
      const bool expect = minors.count(oracle::brute_key(h)) > 0;
      ASSERT_EQ(has_minor(g, h), expect) << encode_graph6(g) << " vs " << encode_graph6(h);
      positives += expect;
      ++checked;
    }
  }
  EXPECT_GT(positives, checked / 4);
  EXPECT_LT(positives, checked);
}

// Property: Wagner. Planar iff neither K5 nor K3,3 is a minor; 10,000 graphs, n <= 10.
TEST(Minors, PlanarityMatchesKuratowskiMinors) {
  std::mt19937_64 rng(10000);
  const Graph k5 = Graph::complete(5), k33 = Graph::complete_bipartite(3, 3);
  int planar = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 10);
    // densities around the planarity threshold
    const double p = 0.15 + 0.45 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(rng, n, p);
    const bool minor_free = !has_minor(g, k5) && !has_minor(g, k33);
    ASSERT_EQ(is_planar(g), minor_free) << encode_graph6(g);
    planar += minor_free;
  }
  EXPECT_GT(planar, 2000);
  EXPECT_LT(planar, 9000);
}

namespace {

// Petersen family by Delta-Y / Y-Delta moves from K6, deduplicated by canonical form.
std::vector<Graph> delta_wye_closure(const Graph& seed) {
  std::set<std::string> seen{canonical_g6(seed)};
  std::vector<Graph> all{seed}, todo{seed};
  auto push = [&](const Graph& h) {
    if (seen.insert(canonical_g6(h)).second) {
      all.push_back(h);
      todo.push_back(h);
    }
  };
  while (!todo.empty()) {
    const Graph g = todo.back();
    todo.pop_back();
    const int n = g.order();
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z) {
          if (g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z)) {
            Graph h = g;
            h.remove_edge(x, y);
            h.remove_edge(y, z);
            h.remove_edge(x, z);
            push(h.with_vertex(bit(x) | bit(y) | bit(z)));
          }
        }
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != 3) continue;
      const auto nb = to_vector(g.neighbors(v));
      if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[1], nb[2]) || g.has_edge(nb[0], nb[2])) continue;
      Graph h = g;
      h.add_edge(nb[0], nb[1]);
      h.add_edge(nb[1], nb[2]);
      h.add_edge(nb[0], nb[2]);
      push(h.without_vertex(v));
    }
  }
  return all;
}

}  // namespace

TEST(Minors, PetersenFamilyPatterns) {
  const auto family = delta_wye_closure(Graph::complete(6));
  ASSERT_EQ(family.size(), 7u);
  std::set<std::string> expected;
  for (const Graph& g : family) expected.insert(canonical_g6(g));

  std::set<std::string> named;
  for (const char* name : {"K6", "P7", "P8", "K44_minus_e", "P9", "K331", "Petersen"}) {
    const Graph& g = minor_pattern(name);
    named.insert(canonical_g6(g));
    EXPECT_TRUE(is_obstruction(g)) << name;
  }
  EXPECT_EQ(named, expected);
  EXPECT_TRUE(isomorphic(minor_pattern("Y_minus"), minor_pattern("P7")));
  EXPECT_TRUE(isomorphic(minor_pattern("M"), minor_pattern("P8")));

  std::vector<Graph> list(family.begin(), family.end());
  EXPECT_TRUE(minor_closed_check(list).violations.empty());
}

TEST(Minors, NamedPatterns) {
  EXPECT_EQ(minor_pattern("K5").size(), 10);
  EXPECT_EQ(minor_pattern("K33_plus_e").size(), 10);
  EXPECT_EQ(minor_pattern("K5_minus_e").size(), 9);
  EXPECT_EQ(minor_pattern("K33_minus_e").size(), 8);
  EXPECT_THROW(minor_pattern("K7"), Error);
  EXPECT_GE(minor_pattern_names().size(), 14u);
}

TEST(Minors, ClosedCheckFindsContainment) {
  std::vector<Graph> list{Graph::complete(5), Graph::complete(6), Graph::complete_bipartite(3, 3)};
  const auto report = minor_closed_check(list);
  // K5 < K6 and K3,3 < K6
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_EQ(report.violations[0], (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(report.violations[1], (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_THROW(minor_closed_check(std::vector<Graph>{}), Error);
}
