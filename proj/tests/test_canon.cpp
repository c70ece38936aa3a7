#include <gtest/gtest.h>

#include <random>

#include "apexkit/canon.hpp"
#include "apexkit/graph6.hpp"
#include "oracles.hpp"

using namespace apexkit;

TEST(Canon, PetersenRelabelings) {
  std::mt19937_64 rng(3);
  const Graph p = Graph::petersen();
  const std::string c = canonical_g6(p);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(canonical_g6(p.relabeled(oracle::random_permutation(rng, 10))), c);
}

TEST(Canon, DifferentGraphs) {
  Graph k33e = Graph::complete_bipartite(3, 3);
  k33e.add_edge(0, 1);
  EXPECT_NE(canonical_g6(Graph::complete_bipartite(3, 3)), canonical_g6(k33e));
  EXPECT_FALSE(isomorphic(Graph::cycle(6), Graph::disjoint_union(Graph::cycle(3), Graph::cycle(3))));
}

TEST(Canon, RelabelingReproducesCanonical) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 500; ++iter) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.4);
    const CanonicalForm cf = canonical_form(g);
    ASSERT_EQ(encode_graph6(g.relabeled(cf.relabeling)), cf.canon_g6);
  }
}

// Property: canonical form is invariant, and equal forms coincide with brute-force isomorphism for n <= 7.
TEST(Canon, AgreesWithBruteForce) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 600; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const Graph a = oracle::random_graph(rng, n, p);
    const Graph b = iter % 2 ? a.relabeled(oracle::random_permutation(rng, n)) : oracle::random_graph(rng, n, p);
    const bool same = oracle::brute_canon(a) == oracle::brute_canon(b);
    ASSERT_EQ(canonical_g6(a) == canonical_g6(b), same) << encode_graph6(a) << " " << encode_graph6(b);
  }
}

TEST(Canon, AutomorphismGroupOrder) {
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const Labeling lab = canonical_labeling(g);
    const auto group = enumerate_group(lab.generators, n, 10000);
    ASSERT_TRUE(group.has_value());
    ASSERT_EQ(group->size(), oracle::brute_automorphisms(g)) << encode_graph6(g);
    for (const Permutation& gamma : lab.generators) ASSERT_EQ(g.relabeled(gamma), g);
  }
  const Labeling pet = canonical_labeling(Graph::petersen());
  EXPECT_EQ(enumerate_group(pet.generators, 10, 1000)->size(), 120u);
  const Labeling k6 = canonical_labeling(Graph::complete(6));
  EXPECT_EQ(enumerate_group(k6.generators, 6, 1000)->size(), 720u);
}

TEST(Canon, ColouredPartition) {
  // A path 0-1-2: with vertex 0 in its own leading cell, the ends are distinguished.
  const Graph p = Graph::path(3);
  const VertexSet cells_a[] = {bit(0), bit(1) | bit(2)};
  const VertexSet cells_b[] = {bit(2), bit(0) | bit(1)};
  EXPECT_EQ(canonical_labeling(p, cells_a).canonical, canonical_labeling(p, cells_b).canonical);
  const VertexSet cells_c[] = {bit(1), bit(0) | bit(2)};
  EXPECT_NE(canonical_labeling(p, cells_a).canonical, canonical_labeling(p, cells_c).canonical);
}
