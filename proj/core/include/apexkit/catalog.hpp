#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "apexkit/structure2.hpp"

namespace apexkit {

/// The six appendix blocks.
enum class Figure { NonPlanarC, Disjoint2Cuts, Intersecting2Cuts, MoreIntersecting2Cuts, ThirtyThree, ThirtyNine };

std::string to_string(Figure f);
Figure figure_from_string(std::string_view name);
std::vector<Figure> all_figures();
ObstructionClass expected_class(Figure f);
std::size_t expected_block_size(Figure f);

struct CatalogEntry {
  std::string g6;
  Figure figure;
  ObstructionClass expected;
};

/// FNV-1a 64 over the entries, each followed by a newline.
inline constexpr std::uint64_t kCatalogChecksum = 0xfc1de49cb8894b37ULL;

/// The 133 connectivity-2 obstructions, in printed order.
std::vector<CatalogEntry> load_catalog();
std::vector<std::string> figure_block(Figure f);
std::uint64_t catalog_checksum();

}  // namespace apexkit
