#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "apexkit/canon.hpp"
#include "apexkit/catalog.hpp"
#include "apexkit/connectivity.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/generate.hpp"
#include "apexkit/graph6.hpp"
#include "apexkit/search.hpp"
#include "apexkit/structure2.hpp"

using namespace apexkit;

namespace {

struct Decomposed {
  std::string canon;
  Graph heavy{0};
  VertexSet na = 0, nb = 0;
  LightKind light = LightKind::Other;
};

// each unique-cut obstruction split at its 2-cut
std::vector<Decomposed> unique_cut_obstructions() {
  std::vector<Decomposed> out;
  for (Figure f : {Figure::ThirtyThree, Figure::ThirtyNine}) {
    for (const std::string& g6 : figure_block(f)) {
      const Graph g = decode_graph6(g6);
      const VertexSet c = enumerate_two_cuts(g).at(0).cut;
      const TwoCutRecord r = analyze_cut(g, lowest(c), lowest(c & (c - 1)));
      Decomposed d;
      d.canon = canonical_g6(g);
      d.heavy = g.induced(r.heavy);
      const auto cv = to_vector(r.heavy);
      for (std::size_t i = 0; i < cv.size(); ++i) {
        if (g.has_edge(cv[i], r.a)) d.na |= bit(static_cast<int>(i));
        if (g.has_edge(cv[i], r.b)) d.nb |= bit(static_cast<int>(i));
      }
      d.light = r.light_aug_kind;
      out.push_back(d);
    }
  }
  return out;
}

std::vector<std::string> canon_of_block(Figure f) {
  std::vector<std::string> v;
  for (const auto& g6 : figure_block(f)) v.push_back(canonical_g6(decode_graph6(g6)));
  std::sort(v.begin(), v.end());
  return v;
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("apexkit_test_" + name);
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Search, ConfigValidation) {
  SearchConfig c;
  EXPECT_NO_THROW(validate(c));
  c.heavy_min = 3;
  EXPECT_THROW(validate(c), ConfigInvalid);
  c = {};
  c.heavy_max = 13;
  EXPECT_THROW(validate(c), ConfigInvalid);
  c = {};
  c.heavy_min = 8;
  c.heavy_max = 7;
  EXPECT_THROW(validate(c), ConfigInvalid);
  c = {};
  c.min_attach_degree = 0;
  EXPECT_THROW(validate(c), ConfigInvalid);
  c = {};
  c.light_kinds = {LightKind::Other};
  EXPECT_THROW(validate(c), ConfigInvalid);
  c = {};
  c.source = "/nonexistent/heavy.g6";
  EXPECT_THROW(unique_cut_search(c), ConfigInvalid);
}

TEST(Search, LightVariants) {
  const auto v = light_variants({LightKind::K5, LightKind::K33, LightKind::K33e});
  ASSERT_EQ(v.size(), 7u);
  for (const LightVariant& l : v) {
    // rebuild L+ = L + a + b + ab and compare with its kind
    Graph plus = l.light.with_vertex(l.to_a);
    plus = plus.with_vertex(l.to_b);
    plus.add_edge(plus.order() - 2, plus.order() - 1);
    Graph ref = l.kind == LightKind::K5 ? Graph::complete(5) : Graph::complete_bipartite(3, 3);
    if (l.kind == LightKind::K33e) ref.add_edge(0, 1);
    EXPECT_TRUE(isomorphic(plus, ref)) << l.name;
  }
  EXPECT_EQ(light_variants({LightKind::K5}).size(), 1u);
}

// Every pruning rule is conservative on the 72.
TEST(Search, PruningKeepsKnownObstructions) {
  const auto all = unique_cut_obstructions();
  ASSERT_EQ(all.size(), 72u);
  const auto lights = light_variants({LightKind::K5, LightKind::K33, LightKind::K33e});
  for (const Decomposed& d : all) {
    EXPECT_GE(d.heavy.order(), 5);
    EXPECT_LE(d.heavy.order(), 9);
    const auto sets = admissible_attachments(d.heavy, 3);
    EXPECT_TRUE(std::binary_search(sets.begin(), sets.end(), d.na)) << d.canon;
    EXPECT_TRUE(std::binary_search(sets.begin(), sets.end(), d.nb)) << d.canon;
    EXPECT_FALSE(pair_rejection(d.heavy, d.na, d.nb)) << d.canon;
    bool rebuilt = false;
    for (const LightVariant& l : lights) {
      const Graph g = glue(d.heavy, d.na, d.nb, l);
      if (canonical_g6(g) == d.canon) {
        rebuilt = true;
        EXPECT_EQ(l.kind, d.light);
        EXPECT_FALSE(glued_rejection(g)) << d.canon;
      }
    }
    EXPECT_TRUE(rebuilt) << d.canon;
  }
}

TEST(Search, HeavyOrderFive) {
  SearchConfig c;
  c.heavy_min = c.heavy_max = 5;
  const SearchResult r = unique_cut_search(c);
  std::vector<std::string> expect;
  for (const auto& d : unique_cut_obstructions())
    if (d.heavy.order() == 5) expect.push_back(d.canon);
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(r.obstructions, expect);
  EXPECT_EQ(expect.size(), 3u);
  EXPECT_EQ(r.stats.graphs_generated, 20u);
  for (const auto& g6 : r.obstructions) EXPECT_LE(decode_graph6(g6).order(), 5 + 2 + 4);
}

TEST(Search, LightKindK5Only) {
  SearchConfig c;
  c.heavy_max = 7;
  c.light_kinds = {LightKind::K5};
  const SearchResult r = unique_cut_search(c);
  std::vector<std::string> expect;
  for (const auto& d : unique_cut_obstructions())
    if (d.heavy.order() <= 7 && d.light == LightKind::K5) expect.push_back(d.canon);
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(r.obstructions, expect);
  EXPECT_FALSE(expect.empty());
}

TEST(Search, WorkersDoNotChangeOutput) {
  SearchConfig c;
  c.heavy_max = 7;
  const SearchResult one = unique_cut_search(c);
  c.workers = 4;
  const SearchResult four = unique_cut_search(c);
  EXPECT_EQ(one.obstructions, four.obstructions);
  EXPECT_EQ(one.stats, four.stats);
  EXPECT_EQ(one.obstructions.size(), 36u);
}

TEST(Search, CheckpointResume) {
  const auto path = temp_file("checkpoint.txt");
  SearchConfig c;
  c.heavy_max = 7;
  const SearchResult plain = unique_cut_search(c);

  c.checkpoint = path.string();
  const SearchResult first = unique_cut_search(c);
  EXPECT_EQ(first.obstructions, plain.obstructions);
  EXPECT_EQ(first.stats, plain.stats);

  // keep the header and a few units, then a torn line
  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string s; std::getline(in, s);) lines.push_back(s);
  }
  ASSERT_GT(lines.size(), 10u);
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i < 6; ++i) out << lines[i] << "\n";
    out << lines[6].substr(0, lines[6].size() / 2);
  }
  std::size_t calls = 0, total = 0;
  c.progress = [&](std::size_t, std::size_t t) {
    ++calls;
    total = t;
  };
  const SearchResult resumed = unique_cut_search(c);
  EXPECT_EQ(resumed.obstructions, plain.obstructions);
  EXPECT_EQ(resumed.stats, plain.stats);
  EXPECT_EQ(calls, total - 5);

  SearchConfig other = c;
  other.min_attach_degree = 2;
  EXPECT_THROW(unique_cut_search(other), ConfigInvalid);
  std::filesystem::remove(path);
}

TEST(Search, ExternalSource) {
  const auto path = temp_file("heavy.g6");
  {
    std::ofstream out(path);
    for (int n = 5; n <= 6; ++n)
      for (const Graph& g : generate_connected_planar(n)) out << encode_graph6(g) << "\n";
    out << encode_graph6(Graph::complete(5)) << "\n";  // non-planar, skipped
  }
  SearchConfig c;
  c.heavy_max = 6;
  const SearchResult internal = unique_cut_search(c);
  c.source = path.string();
  const SearchResult external = unique_cut_search(c);
  EXPECT_EQ(internal.obstructions, external.obstructions);
  EXPECT_EQ(external.stats.pruned.at("source_rejected"), 1u);
  std::filesystem::remove(path);
}

TEST(Search, HeavyNonplanarConstruction) {
  const SearchResult r = heavy_nonplanar_search(true);
  EXPECT_EQ(r.obstructions, canon_of_block(Figure::NonPlanarC));
  const SearchResult all = heavy_nonplanar_search(false);
  EXPECT_GT(all.obstructions.size(), r.obstructions.size());
  EXPECT_TRUE(std::includes(all.obstructions.begin(), all.obstructions.end(), r.obstructions.begin(), r.obstructions.end()));

  ClassifyOptions any;
  any.heavy_rule = HeavyRule::AnyCut;
  int basic_rule_hits = 0;
  for (const auto& g6 : r.obstructions) {
    const Graph g = decode_graph6(g6);
    EXPECT_EQ(classify(g, any).label, ObstructionClass::HeavyNonplanar);
    basic_rule_hits += classify(g).label == ObstructionClass::HeavyNonplanar;
  }
  EXPECT_EQ(basic_rule_hits, 20);
}

TEST(Search, Disconnected) {
  const SearchResult r = disconnected_search();
  ASSERT_EQ(r.obstructions.size(), 3u);
  std::vector<int> orders;
  for (const auto& g6 : r.obstructions) {
    const Graph g = decode_graph6(g6);
    EXPECT_EQ(components(g).size(), 2u);
    orders.push_back(g.order());
  }
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<int>{10, 11, 12}));
}

TEST(Search, VerifyCatalog) {
  std::vector<std::string> lines;
  for (const auto& e : load_catalog()) lines.push_back(e.g6);
  const CatalogReport full = verify_catalog(lines, false);
  EXPECT_EQ(full.passed, 133);
  EXPECT_EQ(full.failed, 0);
  EXPECT_EQ(full.duplicates, 0);
  EXPECT_EQ(full.census.at("UNIQUE_CUT_SPLIT"), 33);

  auto dup = lines;
  dup.push_back(lines[5]);
  const CatalogReport d = verify_catalog(dup, false);
  EXPECT_EQ(d.duplicates, 1);
  EXPECT_TRUE(d.rows.back().duplicate);
  EXPECT_EQ(d.census, full.census);

  auto k5 = lines;
  k5.push_back("D~{");
  const CatalogReport f = verify_catalog(k5, false);
  EXPECT_EQ(f.failed, 1);
  EXPECT_NE(f.rows.back().failure.find("apex"), std::string::npos);

  EXPECT_THROW(verify_catalog({"D~{", "!!"}, false), MalformedGraph6);
}
