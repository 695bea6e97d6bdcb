#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "srgec/error.hpp"
#include "srgec/graph.hpp"

namespace srgec {

// graph6 (headerless, canonical). Vertex count is encoded as one byte
// (n <= 62) or '~' followed by three bytes (n <= 258047); the 8-byte form for
// larger graphs is rejected as Unsupported. The upper triangle is read
// column-wise: bits (0,1), (0,2), (1,2), (0,3), ... packed six to a byte,
// most significant first, padded with zeros.
inline constexpr long long kGraph6MaxOrder = 258047;

namespace detail {

inline int graph6_value(std::string_view text, std::size_t offset) {
  if (offset >= text.size()) throw Error(ErrorKind::ParseError, "unexpected end of input", offset);
  const auto c = static_cast<unsigned char>(text[offset]);
  if (c < 63 || c > 126)
    throw Error(ErrorKind::ParseError, "byte " + std::to_string(c) + " outside graph6 range", offset);
  return c - 63;
}

}  // namespace detail

inline Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) pos = header.size();

  long long n = detail::graph6_value(text, pos);
  if (n == 63) {
    if (detail::graph6_value(text, pos + 1) == 63)
      throw Error(ErrorKind::Unsupported, "graphs above " + std::to_string(kGraph6MaxOrder) + " vertices",
                  pos + 1);
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | detail::graph6_value(text, pos + i);
    pos += 4;
  } else {
    pos += 1;
  }

  const auto nn = static_cast<std::uint64_t>(n);
  const std::uint64_t bits = nn * (nn - (nn > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(bytes) + " edge bytes, found " + std::to_string(text.size() - pos),
                text.size() < pos + bytes ? text.size() : pos + bytes);

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      const int value = detail::graph6_value(text, at);
      if ((value >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (std::size_t at = pos + static_cast<std::size_t>(bit / 6); at < text.size(); ++at)
    detail::graph6_value(text, at);
  return Graph(static_cast<int>(n), edges);
}

inline std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  if (n > kGraph6MaxOrder)
    throw Error(ErrorKind::Unsupported, "graph6 encoder capped at " + std::to_string(kGraph6MaxOrder) + " vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

// One encoding per non-empty line.
inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(from_graph6(line));
    } catch (const Error& e) {
      throw Error(e.kind(), path + ":" + std::to_string(line_no) + ": " + e.message(), e.position());
    }
  }
  return graphs;
}

inline void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace srgec
