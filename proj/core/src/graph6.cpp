#include "apexkit/graph6.hpp"

#include <istream>

#include "apexkit/errors.hpp"

namespace apexkit {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw MalformedGraph6("empty graph6 word");
  if (text.starts_with(">>graph6<<")) throw MalformedGraph6("graph6 header prefix not supported");
  for (char c : text) {
    const int code = static_cast<unsigned char>(c);
    if (code < 63 || code > 126) {
      throw MalformedGraph6("character code " + std::to_string(code) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > Graph::kMaxOrder) throw MalformedGraph6("order above 62 (extended size header)");
  const std::size_t expected = 1 + body_length(n);
  if (text.size() != expected) {
    throw MalformedGraph6("length " + std::to_string(text.size()) + " but order " + std::to_string(n) +
                          " needs " + std::to_string(expected));
  }

  Graph g(n);
  std::size_t k = 0;
  const auto bit_at = [&](std::size_t index) {
    const int chunk = static_cast<unsigned char>(text[1 + index / 6]) - 63;
    return (chunk >> (5 - index % 6)) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit_at(k++)) g.add_edge(i, j);
    }
  }
  for (; k < 6 * body_length(n); ++k) {
    if (bit_at(k)) throw MalformedGraph6("non-zero padding bits");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::vector<std::string> read_graph6_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

}  // namespace apexkit
