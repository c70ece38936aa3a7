#include <gtest/gtest.h>

#include <set>

#include "apexkit/canon.hpp"
#include "apexkit/connectivity.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/generate.hpp"
#include "apexkit/planarity.hpp"
#include "oracles.hpp"

using namespace apexkit;

namespace {

Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((mask >> k) & 1) g.add_edge(u, v);
  return g;
}

bool wanted(PlanarFamily family, const Graph& g) {
  return (family == PlanarFamily::All || oracle::brute_connected(g, 0)) && is_planar(g);
}

std::set<std::uint64_t> labeled_classes(PlanarFamily family, int n) {
  std::set<std::uint64_t> keys;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
    const Graph g = from_mask(n, mask);
    if (wanted(family, g)) keys.insert(oracle::brute_key(g));
  }
  return keys;
}

std::vector<Graph> generated(PlanarFamily family, int n) {
  std::vector<Graph> out;
  auto sink = [&](const Graph& g) { out.push_back(g); };
  family == PlanarFamily::Connected ? generate_connected_planar(n, sink) : generate_planar(n, sink);
  return out;
}

}  // namespace

// Completeness and isomorph-freeness against every labeled graph, n <= 6.
TEST(Generate, MatchesLabeledClasses) {
  for (PlanarFamily family : {PlanarFamily::Connected, PlanarFamily::All}) {
    for (int n = 1; n <= 6; ++n) {
      const auto gen = generated(family, n);
      std::set<std::uint64_t> keys;
      for (const Graph& g : gen) keys.insert(oracle::brute_key(g));
      EXPECT_EQ(keys.size(), gen.size()) << "duplicate class at n=" << n;
      EXPECT_EQ(keys, labeled_classes(family, n)) << "n=" << n;
    }
  }
}

// n = 7: sum of n!/|Aut| over the output equals the labeled count.
TEST(Generate, OrbitCountMatchesLabeledAtSeven) {
  for (PlanarFamily family : {PlanarFamily::Connected, PlanarFamily::All}) {
    std::uint64_t labeled = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 21); ++mask) labeled += wanted(family, from_mask(7, mask));
    std::uint64_t weighted = 0;
    for (const Graph& g : generated(family, 7)) weighted += 5040 / oracle::brute_automorphisms(g);
    EXPECT_EQ(weighted, labeled);
  }
}

TEST(Generate, Soundness) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> canon;
    for (const Graph& g : generate_connected_planar(n)) {
      ASSERT_EQ(g.order(), n);
      ASSERT_TRUE(is_connected(g));
      ASSERT_TRUE(is_planar(g));
      canon.insert(canonical_g6(g));
    }
    EXPECT_EQ(canon.size(), generate_connected_planar(n).size());
  }
}

TEST(Generate, Counts) {
  const std::vector<std::uint64_t> connected{1, 1, 2, 6, 20, 99, 646, 5974};
  const std::vector<std::uint64_t> all{1, 2, 4, 11, 33, 142, 822, 6966};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(count_planar(PlanarFamily::Connected, n), connected[n - 1]) << n;
    EXPECT_EQ(count_planar(PlanarFamily::All, n), all[n - 1]) << n;
  }
}

TEST(Generate, CensusFiveToNine) {
  std::uint64_t connected = 0, all = 0;
  for (int n = 5; n <= 9; ++n) {
    connected += count_planar(PlanarFamily::Connected, n);
    all += count_planar(PlanarFamily::All, n);
  }
  EXPECT_EQ(connected, 78624u);
  // the printed census counts every planar graph, connected or not
  EXPECT_EQ(all, 87816u);
}

TEST(Generate, UnitsPartitionOutput) {
  const int n = 7;
  std::uint64_t total = 0;
  for (const Graph& u : generation_units(PlanarFamily::Connected, n, 3)) {
    EXPECT_EQ(u.order(), 4);
    expand_unit(PlanarFamily::Connected, u, n, [&](const Graph&) { ++total; });
  }
  EXPECT_EQ(total, 646u);
  EXPECT_EQ(count_planar(PlanarFamily::Connected, 8, 3), 5974u);
}

TEST(Generate, OrderRange) {
  EXPECT_THROW(generate_connected_planar(0), ConfigInvalid);
  EXPECT_THROW(generate_connected_planar(13), ConfigInvalid);
}
