#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "trimetric/error.hpp"
#include "trimetric/graph.hpp"

namespace trimetric {

// graph6 short form: one header byte n + 63, then the upper triangle of the
// adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...)
// packed big-endian into 6-bit groups, each group offset by 63.
inline constexpr std::size_t kGraph6MaxOrder = 62;

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw UnsupportedFormError("graph6 short form supports n <= 62, got n = " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int group = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

/// Decodes one graph6 word. Trailing "\r" or "\n" is ignored, as is an
/// optional ">>graph6<<" file header.
inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (text.empty()) throw ParseError("graph6: empty input", base);
  const auto head = static_cast<unsigned char>(text[0]);
  if (head == 126) throw UnsupportedFormError("graph6: long form (n > 62) is not supported");
  if (head < 63 || head > 126) throw ParseError("graph6: invalid length byte", base);
  const std::size_t n = head - 63;
  if (n == 0) throw ParseError("graph6: order 0 has no graph", base);
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - 1 != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for n = " +
                         std::to_string(n) + ", found " + std::to_string(text.size() - 1),
                     base + std::min(text.size(), expected + 1));
  }
  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  Vertex i = 0, j = 1;
  for (std::size_t b = 1; b < text.size(); ++b) {
    const auto c = static_cast<unsigned char>(text[b]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + b);
    const int value = c - 63;
    for (int s = 5; s >= 0 && k < bits; --s, ++k) {
      if ((value >> s) & 1) {
        rows[i] |= 1ULL << j;
        rows[j] |= 1ULL << i;
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_rows(n, std::move(rows));
}

/// Reads one graph per non-empty line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

inline void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace trimetric
