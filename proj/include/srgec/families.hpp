#pragma once

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "srgec/error.hpp"
#include "srgec/graph.hpp"

namespace srgec {

// t mutually orthogonal Latin squares of order m; squares[a][i][j].
struct LatinSquareSet {
  int m = 0;
  std::vector<std::vector<std::vector<int>>> squares;

  int t() const { return static_cast<int>(squares.size()); }
};

// Steiner 2-(m, ell, 1) design.
struct Design {
  int m = 0;
  int ell = 0;
  std::vector<std::vector<int>> blocks;
};

enum class PartitionKind { Spread, HoffmanColoring, Bipartition, Halves };

inline std::string_view to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::Spread: return "spread";
    case PartitionKind::HoffmanColoring: return "hoffman-coloring";
    case PartitionKind::Bipartition: return "bipartition";
    case PartitionKind::Halves: return "halves";
  }
  return "?";
}

inline PartitionKind parse_partition_kind(std::string_view s) {
  if (s == "spread") return PartitionKind::Spread;
  if (s == "hoffman-coloring") return PartitionKind::HoffmanColoring;
  if (s == "bipartition") return PartitionKind::Bipartition;
  if (s == "halves") return PartitionKind::Halves;
  throw Error(ErrorKind::ParseError, "unknown partition kind '" + std::string(s) + "'");
}

struct VertexPartition {
  std::vector<std::vector<Vertex>> classes;
  PartitionKind kind = PartitionKind::Spread;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

// Disjoint classes covering 0..n-1 exactly once.
inline bool covers_exactly(const VertexPartition& p, int n) {
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (const auto& cls : p.classes)
    for (Vertex v : cls) {
      if (v < 0 || v >= n) return false;
      if (hits[static_cast<std::size_t>(v)]++) return false;
    }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

// --- Latin squares -------------------------------------------------------

inline bool is_latin(const std::vector<std::vector<int>>& sq, int m) {
  if (static_cast<int>(sq.size()) != m) return false;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(sq[static_cast<std::size_t>(i)].size()) != m) return false;
    std::vector<char> row(static_cast<std::size_t>(m), 0), col(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
      const int r = sq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int c = sq[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (r < 0 || r >= m || c < 0 || c >= m) return false;
      if (row[static_cast<std::size_t>(r)]++ || col[static_cast<std::size_t>(c)]++) return false;
    }
  }
  return true;
}

// Number of distinct symbol pairs (A[i][j], B[i][j]); m^2 iff orthogonal.
inline int distinct_symbol_pairs(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                                 int m) {
  std::vector<char> seen(static_cast<std::size_t>(m * m), 0);
  int count = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto key = static_cast<std::size_t>(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m +
                                                b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      if (!seen[key]++) ++count;
    }
  return count;
}

inline bool is_valid(const LatinSquareSet& ls) {
  if (ls.m < 1) return false;
  for (const auto& sq : ls.squares)
    if (!is_latin(sq, ls.m)) return false;
  for (std::size_t a = 0; a < ls.squares.size(); ++a)
    for (std::size_t b = a + 1; b < ls.squares.size(); ++b)
      if (distinct_symbol_pairs(ls.squares[a], ls.squares[b], ls.m) != ls.m * ls.m) return false;
  return true;
}

inline LatinSquareSet cyclic_latin_square(int m) {
  if (m < 2) throw Error(ErrorKind::ParameterRange, "cyclic Latin square needs m >= 2");
  LatinSquareSet ls{m, {std::vector<std::vector<int>>(static_cast<std::size_t>(m))}};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ls.squares[0][static_cast<std::size_t>(i)].push_back((i + j) % m);
  return ls;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Affine MOLS over Z_p: L_a[i][j] = a*i + j (mod p), a = 1..t.
inline LatinSquareSet mols_prime(int p, int t) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (t < 1 || t > p - 1) throw Error(ErrorKind::ParameterRange, "need 1 <= t <= p-1");
  LatinSquareSet ls{p, {}};
  for (int a = 1; a <= t; ++a) {
    std::vector<std::vector<int>> sq(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p)));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) sq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (a * i + j) % p;
    ls.squares.push_back(std::move(sq));
  }
  return ls;
}

// Three MOLS of order 4 from GF(4) = {0, 1, x, x+1} encoded as 0..3
// (addition is XOR): L_a[i][j] = a*i + j for a = 1, 2, 3.
inline LatinSquareSet mols4() {
  static constexpr int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  LatinSquareSet ls{4, {}};
  for (int a = 1; a <= 3; ++a) {
    std::vector<std::vector<int>> sq(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mul[a][i] ^ j;
    ls.squares.push_back(std::move(sq));
  }
  return ls;
}

// Cells (r,c) are vertex r*m + c.
inline Graph latin_square_graph(const LatinSquareSet& ls) {
  if (!is_valid(ls)) throw Error(ErrorKind::InvalidInput, "not a set of mutually orthogonal Latin squares");
  const int m = ls.m;
  return Graph::from_predicate(m * m, [&](Vertex u, Vertex v) {
    const int ru = u / m, cu = u % m, rv = v / m, cv = v % m;
    if (ru == rv || cu == cv) return true;
    for (const auto& sq : ls.squares)
      if (sq[static_cast<std::size_t>(ru)][static_cast<std::size_t>(cu)] ==
          sq[static_cast<std::size_t>(rv)][static_cast<std::size_t>(cv)])
        return true;
    return false;
  });
}

inline Graph lattice(int m) {
  if (m < 2) throw Error(ErrorKind::ParameterRange, "lattice needs m >= 2");
  return latin_square_graph(LatinSquareSet{m, {}});
}

// Rows of the m x m grid; a spread in any Latin square graph of order m.
inline VertexPartition row_spread(int m, int /*t*/ = 0) {
  VertexPartition p{{}, PartitionKind::Spread};
  for (int r = 0; r < m; ++r) {
    std::vector<Vertex> cls;
    for (int c = 0; c < m; ++c) cls.push_back(r * m + c);
    p.classes.push_back(std::move(cls));
  }
  return p;
}

// --- triangular graphs and designs ---------------------------------------

// Vertices are the 2-subsets of {0..m-1} in lexicographic order.
inline std::vector<std::pair<int, int>> two_subsets(int m) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) out.emplace_back(a, b);
  return out;
}

inline Graph triangular(int m) {
  if (m < 4) throw Error(ErrorKind::ParameterRange, "triangular graph needs m >= 4");
  const auto pairs = two_subsets(m);
  return Graph::from_predicate(static_cast<int>(pairs.size()), [&](Vertex u, Vertex v) {
    const auto [a, b] = pairs[static_cast<std::size_t>(u)];
    const auto [c, d] = pairs[static_cast<std::size_t>(v)];
    return a == c || a == d || b == c || b == d;
  });
}

inline bool is_valid(const Design& d) {
  if (d.m < 2 || d.ell < 2) return false;
  std::vector<int> cover(static_cast<std::size_t>(d.m * d.m), 0);
  for (const auto& block : d.blocks) {
    if (static_cast<int>(block.size()) != d.ell) return false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 0 || block[i] >= d.m) return false;
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        const int x = std::min(block[i], block[j]), y = std::max(block[i], block[j]);
        if (x == y) return false;
        ++cover[static_cast<std::size_t>(x * d.m + y)];
      }
    }
  }
  for (int x = 0; x < d.m; ++x)
    for (int y = x + 1; y < d.m; ++y)
      if (cover[static_cast<std::size_t>(x * d.m + y)] != 1) return false;
  return true;
}

// The 2-(m,2,1) design whose blocks are all pairs.
inline Design pair_design(int m) {
  Design d{m, 2, {}};
  for (auto [a, b] : two_subsets(m)) d.blocks.push_back({a, b});
  return d;
}

// Bose construction on Z_s x {0,1,2}, s = v/3; point (x,i) is i*s + x.
inline Design bose_sts(int v) {
  if (v < 9 || v % 6 != 3) throw Error(ErrorKind::ParameterRange, "Bose STS needs v = 3 (mod 6), v >= 9");
  const int s = v / 3;
  const int half = (s + 1) / 2;  // inverse of 2 mod s
  auto point = [s](int x, int i) { return i * s + x; };
  Design d{v, 3, {}};
  for (int x = 0; x < s; ++x) d.blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < s; ++x)
      for (int y = x + 1; y < s; ++y) {
        std::vector<int> block{point(x, i), point(y, i), point(((x + y) * half) % s, (i + 1) % 3)};
        std::sort(block.begin(), block.end());
        d.blocks.push_back(std::move(block));
      }
  return d;
}

// Blocks are vertices; adjacent when they share a point.
inline Graph block_graph(const Design& d) {
  if (!is_valid(d)) throw Error(ErrorKind::InvalidInput, "not a Steiner 2-design");
  std::vector<std::vector<char>> member(d.blocks.size(), std::vector<char>(static_cast<std::size_t>(d.m), 0));
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    for (int p : d.blocks[b]) member[b][static_cast<std::size_t>(p)] = 1;
  return Graph::from_predicate(static_cast<int>(d.blocks.size()), [&](Vertex u, Vertex v) {
    for (int p : d.blocks[static_cast<std::size_t>(u)])
      if (member[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)]) return true;
    return false;
  });
}

// --- imprimitive families ------------------------------------------------

// ell disjoint copies of K_m; vertex v lies in clique v / m.
inline Graph disjoint_cliques(int ell, int m) {
  if (ell < 2 || m < 2) throw Error(ErrorKind::ParameterRange, "need ell, m >= 2");
  return Graph::from_predicate(ell * m, [m](Vertex u, Vertex v) { return u / m == v / m; });
}

inline Graph complete_multipartite(int ell, int m) {
  if (ell < 2 || m < 2) throw Error(ErrorKind::ParameterRange, "need ell, m >= 2");
  return Graph::from_predicate(ell * m, [m](Vertex u, Vertex v) { return u / m != v / m; });
}

inline VertexPartition multipartite_parts(int ell, int m) {
  VertexPartition p{{}, PartitionKind::HoffmanColoring};
  for (int c = 0; c < ell; ++c) {
    std::vector<Vertex> cls;
    for (int i = 0; i < m; ++i) cls.push_back(c * m + i);
    p.classes.push_back(std::move(cls));
  }
  return p;
}

// --- plain-text formats --------------------------------------------------
//
// Design:  "m ell" then one block per line.
// Squares: "m t" then t*m rows, square after square.
// Partition: "<kind> <class count>" then one class per line.

namespace detail {

inline std::vector<int> read_int_line(std::istream& in, std::size_t& line_no, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    std::vector<int> values;
    long long x;
    while (ss >> x) values.push_back(static_cast<int>(x));
    ss.clear();
    std::string rest;
    if (ss >> rest) throw Error(ErrorKind::ParseError, std::string("non-integer token in ") + what, line_no);
    return values;
  }
  throw Error(ErrorKind::ParseError, std::string("unexpected end of ") + what, line_no + 1);
}

}  // namespace detail

inline Design read_design(std::istream& in) {
  std::size_t line_no = 0;
  const auto head = detail::read_int_line(in, line_no, "design");
  if (head.size() != 2) throw Error(ErrorKind::ParseError, "design header must be 'm ell'", line_no);
  Design d{head[0], head[1], {}};
  if (d.ell < 2 || d.m < d.ell) throw Error(ErrorKind::ParseError, "bad design header", line_no);
  const long long count = static_cast<long long>(d.m) * (d.m - 1) / (static_cast<long long>(d.ell) * (d.ell - 1));
  for (long long b = 0; b < count; ++b) {
    auto block = detail::read_int_line(in, line_no, "design");
    if (static_cast<int>(block.size()) != d.ell) throw Error(ErrorKind::ParseError, "wrong block size", line_no);
    std::sort(block.begin(), block.end());
    d.blocks.push_back(std::move(block));
  }
  if (!is_valid(d)) throw Error(ErrorKind::InvalidInput, "blocks do not form a Steiner 2-design");
  return d;
}

inline void write_design(std::ostream& out, const Design& d) {
  out << d.m << ' ' << d.ell << '\n';
  for (const auto& block : d.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i];
    out << '\n';
  }
}

inline LatinSquareSet read_latin_squares(std::istream& in) {
  std::size_t line_no = 0;
  const auto head = detail::read_int_line(in, line_no, "squares");
  if (head.size() != 2 || head[0] < 1 || head[1] < 0)
    throw Error(ErrorKind::ParseError, "squares header must be 'm t'", line_no);
  LatinSquareSet ls{head[0], {}};
  for (int a = 0; a < head[1]; ++a) {
    std::vector<std::vector<int>> sq;
    for (int r = 0; r < ls.m; ++r) {
      auto row = detail::read_int_line(in, line_no, "squares");
      if (static_cast<int>(row.size()) != ls.m) throw Error(ErrorKind::ParseError, "wrong row length", line_no);
      sq.push_back(std::move(row));
    }
    ls.squares.push_back(std::move(sq));
  }
  if (!is_valid(ls)) throw Error(ErrorKind::InvalidInput, "squares are not mutually orthogonal Latin squares");
  return ls;
}

inline void write_latin_squares(std::ostream& out, const LatinSquareSet& ls) {
  out << ls.m << ' ' << ls.t() << '\n';
  for (const auto& sq : ls.squares)
    for (const auto& row : sq) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
}

inline VertexPartition read_partition(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) ++line_no;
  ++line_no;
  std::istringstream head(line);
  std::string kind;
  int count = -1;
  if (!(head >> kind >> count) || count < 0)
    throw Error(ErrorKind::ParseError, "partition header must be '<kind> <count>'", line_no);
  VertexPartition p{{}, parse_partition_kind(kind)};
  for (int c = 0; c < count; ++c) p.classes.push_back(detail::read_int_line(in, line_no, "partition"));
  return p;
}

inline void write_partition(std::ostream& out, const VertexPartition& p) {
  out << to_string(p.kind) << ' ' << p.classes.size() << '\n';
  for (const auto& cls : p.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << cls[i];
    out << '\n';
  }
}

}  // namespace srgec
