#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "apexkit/canon.hpp"
#include "apexkit/catalog.hpp"
#include "apexkit/errors.hpp"
#include "apexkit/graph6.hpp"

using namespace apexkit;

TEST(Catalog, MatchesDataFile) {
  std::ifstream in(std::string(APEXKIT_DATA_DIR) + "/appendix.g6");
  ASSERT_TRUE(in);
  const auto lines = read_graph6_lines(in);
  const auto cat = load_catalog();
  ASSERT_EQ(lines.size(), cat.size());
  for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(lines[i], cat[i].g6) << i;
}

TEST(Catalog, Checksum) {
  // FNV-1a recomputed here, independent of the library's constexpr copy
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& e : load_catalog()) {
    for (char c : e.g6 + "\n") {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
  }
  EXPECT_EQ(h, kCatalogChecksum);
  EXPECT_EQ(catalog_checksum(), kCatalogChecksum);
}

TEST(Catalog, Blocks) {
  const auto cat = load_catalog();
  EXPECT_EQ(cat.size(), 133u);
  const std::vector<std::size_t> sizes{21, 3, 14, 23, 33, 39};
  std::size_t total = 0;
  for (std::size_t i = 0; i < all_figures().size(); ++i) {
    const Figure f = all_figures()[i];
    EXPECT_EQ(expected_block_size(f), sizes[i]);
    EXPECT_EQ(figure_block(f).size(), sizes[i]);
    EXPECT_EQ(figure_from_string(to_string(f)), f);
    total += sizes[i];
  }
  EXPECT_EQ(total, 133u);
  EXPECT_EQ(expected_class(Figure::Intersecting2Cuts), ObstructionClass::MultiCutsGe3);
  EXPECT_EQ(expected_class(Figure::MoreIntersecting2Cuts), ObstructionClass::ExactlyTwoCuts);
  EXPECT_THROW(figure_from_string("Figure9"), Error);
  // printed order: first and last lines of the appendix
  EXPECT_EQ(cat.front().figure, Figure::NonPlanarC);
  EXPECT_EQ(cat.back().figure, Figure::ThirtyNine);
}

TEST(Catalog, PairwiseNonIsomorphic) {
  std::set<std::string> canon;
  for (const auto& e : load_catalog()) canon.insert(canonical_g6(decode_graph6(e.g6)));
  EXPECT_EQ(canon.size(), 133u);
}
