#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "apexkit/graph.hpp"

namespace apexkit {

/// Decodes a headerless graph6 word (n <= 62). Surrounding whitespace is ignored.
/// Throws MalformedGraph6.
Graph decode_graph6(std::string_view text);

/// Encodes g as graph6 without header or newline.
std::string encode_graph6(const Graph& g);

/// One graph per non-blank line. Lines are returned trimmed.
std::vector<std::string> read_graph6_lines(std::istream& in);

}  // namespace apexkit
