#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "srgec/families.hpp"
#include "srgec/spectra.hpp"

namespace {

using srgec::ErrorKind;
using srgec::Graph;
using srgec::SrgParams;
using Square = std::vector<std::vector<int>>;

template <typename F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const srgec::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no srgec::Error thrown";
  return ErrorKind::InvalidInput;
}

// Independent checks, written against the definitions.
bool latin(const Square& sq, int m) {
  for (int i = 0; i < m; ++i) {
    std::set<int> row, col;
    for (int j = 0; j < m; ++j) {
      row.insert(sq[i][j]);
      col.insert(sq[j][i]);
    }
    if (row.size() != static_cast<std::size_t>(m) || col.size() != static_cast<std::size_t>(m) || *row.begin() != 0 ||
        *row.rbegin() != m - 1 || *col.begin() != 0 || *col.rbegin() != m - 1)
      return false;
  }
  return true;
}

std::size_t pair_count(const Square& a, const Square& b) {
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) pairs.emplace(a[i][j], b[i][j]);
  return pairs.size();
}

bool covers_each_pair_once(const srgec::Design& d) {
  std::map<std::pair<int, int>, int> seen;
  for (const auto& block : d.blocks)
    for (int x : block)
      for (int y : block)
        if (x < y) ++seen[{x, y}];
  if (seen.size() != static_cast<std::size_t>(d.m * (d.m - 1) / 2)) return false;
  for (const auto& [pair, count] : seen)
    if (count != 1) return false;
  return true;
}

std::string srg_of(const Graph& g) {
  const auto p = srgec::recognize_srg(g);
  return p ? p->str() : "none";
}

TEST(Triangular, Parameters) {
  EXPECT_EQ(srg_of(srgec::triangular(5)), "(10,6,3,4)");
  EXPECT_EQ(srg_of(srgec::triangular(8)), "(28,12,6,4)");
  EXPECT_EQ(srg_of(srgec::triangular(4)), "(6,4,2,4)");
  EXPECT_EQ(srg_of(srgec::complement(srgec::triangular(5))), "(10,3,0,1)");
  EXPECT_EQ(error_kind_of([] { srgec::triangular(3); }), ErrorKind::ParameterRange);
}

TEST(Triangular, ClosedFormForManyM) {
  for (int m = 4; m <= 14; ++m) {
    const SrgParams want{m * (m - 1) / 2, 2 * (m - 2), m - 2, 4};
    EXPECT_EQ(srgec::recognize_srg(srgec::triangular(m)), want) << m;
    EXPECT_EQ(srgec::triangular_params(m), want);
  }
}

TEST(Lattice, Parameters) {
  EXPECT_EQ(srg_of(srgec::lattice(6)), "(36,10,4,2)");
  EXPECT_EQ(srg_of(srgec::lattice(4)), "(16,6,2,2)");
  EXPECT_EQ(srg_of(srgec::lattice(2)), "(4,2,0,2)");
  EXPECT_EQ(srgec::is_regular(srgec::lattice(2)), 2);
  EXPECT_EQ(srgec::lattice(2).size(), 4u);
  EXPECT_TRUE(srgec::is_connected(srgec::lattice(2)));
  EXPECT_EQ(error_kind_of([] { srgec::lattice(1); }), ErrorKind::ParameterRange);
}

TEST(CyclicLatinSquare, Examples) {
  EXPECT_EQ(srgec::cyclic_latin_square(2).squares[0], (Square{{0, 1}, {1, 0}}));
  const auto ls4 = srgec::cyclic_latin_square(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_EQ(ls4.squares[0][r][c], (r + c) % 4);
  for (int m = 2; m <= 9; ++m) EXPECT_TRUE(latin(srgec::cyclic_latin_square(m).squares[0], m));
}

TEST(MolsPrime, Orthogonality) {
  const auto p5 = srgec::mols_prime(5, 2);
  ASSERT_EQ(p5.t(), 2);
  EXPECT_EQ(pair_count(p5.squares[0], p5.squares[1]), 25u);
  const auto p3 = srgec::mols_prime(3, 2);
  EXPECT_EQ(pair_count(p3.squares[0], p3.squares[1]), 9u);
  for (int p : {3, 5, 7}) {
    const auto ls = srgec::mols_prime(p, p - 1);
    for (const auto& sq : ls.squares) EXPECT_TRUE(latin(sq, p));
    for (std::size_t a = 0; a < ls.squares.size(); ++a)
      for (std::size_t b = a + 1; b < ls.squares.size(); ++b)
        EXPECT_EQ(pair_count(ls.squares[a], ls.squares[b]), static_cast<std::size_t>(p * p));
  }
  EXPECT_EQ(error_kind_of([] { srgec::mols_prime(4, 1); }), ErrorKind::NotPrime);
  EXPECT_EQ(error_kind_of([] { srgec::mols_prime(5, 5); }), ErrorKind::ParameterRange);
  EXPECT_EQ(error_kind_of([] { srgec::mols_prime(5, 0); }), ErrorKind::ParameterRange);
}

TEST(Mols4, Orthogonality) {
  const auto ls = srgec::mols4();
  ASSERT_EQ(ls.t(), 3);
  for (const auto& sq : ls.squares) EXPECT_TRUE(latin(sq, 4));
  EXPECT_EQ(pair_count(ls.squares[0], ls.squares[1]), 16u);
  EXPECT_EQ(pair_count(ls.squares[0], ls.squares[2]), 16u);
  EXPECT_EQ(pair_count(ls.squares[1], ls.squares[2]), 16u);
  EXPECT_TRUE(srgec::is_valid(ls));
}

TEST(LatinSquareGraph, Parameters) {
  EXPECT_EQ(srgec::latin_square_graph({6, {}}), srgec::lattice(6));
  EXPECT_EQ(srg_of(srgec::latin_square_graph(srgec::cyclic_latin_square(4))), "(16,9,4,6)");
  EXPECT_EQ(srg_of(srgec::latin_square_graph(srgec::mols_prime(5, 3))), "(25,20,15,20)");
  // t = m-1 gives a complete graph.
  EXPECT_EQ(srgec::latin_square_graph(srgec::mols_prime(3, 2)), srgec::complete_graph(9));
}

TEST(LatinSquareGraph, ClosedForm) {
  auto check = [](const srgec::LatinSquareSet& ls) {
    const long long m = ls.m, t = ls.t();
    const SrgParams want{m * m, (t + 2) * (m - 1), m - 2 + t * (t + 1), (t + 1) * (t + 2)};
    EXPECT_EQ(srgec::recognize_srg(srgec::latin_square_graph(ls)), want) << m << ' ' << t;
    EXPECT_EQ(srgec::latin_square_params(m, t), want);
  };
  for (int m = 3; m <= 8; ++m) check({m, {}});
  for (int m = 4; m <= 8; ++m) check(srgec::cyclic_latin_square(m));
  for (int t = 1; t <= 4; ++t) check(srgec::mols_prime(7, t));
  auto two = srgec::mols4();
  two.squares.resize(1);
  check(two);
}

TEST(LatinSquareGraph, RejectsInvalidSet) {
  srgec::LatinSquareSet bad{3, {Square{{0, 1, 2}, {0, 1, 2}, {1, 2, 0}}}};
  EXPECT_EQ(error_kind_of([&] { srgec::latin_square_graph(bad); }), ErrorKind::InvalidInput);
  auto twin = srgec::cyclic_latin_square(5);
  twin.squares.push_back(twin.squares[0]);
  EXPECT_EQ(error_kind_of([&] { srgec::latin_square_graph(twin); }), ErrorKind::InvalidInput);
}

TEST(RowSpread, ClassesAreCliques) {
  const auto s4 = srgec::row_spread(4, 1);
  EXPECT_EQ(s4.classes[0], (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(srgec::covers_exactly(s4, 16));
  const Graph g4 = srgec::latin_square_graph(srgec::cyclic_latin_square(4));
  for (const auto& cls : s4.classes) EXPECT_TRUE(srgec::is_clique(g4, cls));

  const auto s6 = srgec::row_spread(6, 0);
  ASSERT_EQ(s6.classes.size(), 6u);
  for (const auto& cls : s6.classes) {
    EXPECT_EQ(cls.size(), 6u);
    EXPECT_TRUE(srgec::is_clique(srgec::lattice(6), cls));
  }
}

TEST(BoseSts, PairCoverage) {
  const auto d9 = srgec::bose_sts(9);
  EXPECT_EQ(d9.blocks.size(), 12u);
  EXPECT_TRUE(covers_each_pair_once(d9));
  for (int v : {15, 21, 27}) {
    const auto d = srgec::bose_sts(v);
    EXPECT_EQ(d.blocks.size(), static_cast<std::size_t>(v * (v - 1) / 6));
    EXPECT_TRUE(covers_each_pair_once(d)) << v;
    EXPECT_TRUE(srgec::is_valid(d));
  }
  EXPECT_EQ(error_kind_of([] { srgec::bose_sts(13); }), ErrorKind::ParameterRange);
  EXPECT_EQ(error_kind_of([] { srgec::bose_sts(3); }), ErrorKind::ParameterRange);
}

TEST(BlockGraph, Parameters) {
  const Graph b9 = srgec::block_graph(srgec::bose_sts(9));
  EXPECT_EQ(srg_of(b9), "(12,9,6,9)");
  // Complement is 4K3.
  EXPECT_EQ(srg_of(srgec::complement(b9)), "(12,2,1,0)");
  const auto comp = srgec::connected_components(srgec::complement(b9));
  EXPECT_EQ(*std::max_element(comp.begin(), comp.end()), 3);
  EXPECT_EQ(srg_of(srgec::block_graph(srgec::bose_sts(15))), "(35,18,9,9)");  // each block meets 3*6 others
  EXPECT_EQ(srg_of(srgec::block_graph(srgec::pair_design(5))), "(10,6,3,4)");
  for (int v : {9, 15, 21, 27})
    EXPECT_EQ(srgec::recognize_srg(srgec::block_graph(srgec::bose_sts(v))), srgec::block_graph_params(v, 3)) << v;
}

TEST(Imprimitive, Examples) {
  EXPECT_FALSE(srgec::is_connected(srgec::disjoint_cliques(2, 3)));
  EXPECT_EQ(srgec::complete_multipartite(2, 3), srgec::complement(srgec::disjoint_cliques(2, 3)));
  EXPECT_EQ(srgec::is_regular(srgec::complete_multipartite(2, 3)), 3);
  EXPECT_EQ(srgec::is_regular(srgec::complete_multipartite(3, 2)), 4);
  EXPECT_EQ(srg_of(srgec::complete_multipartite(3, 2)), "(6,4,2,4)");
  EXPECT_EQ(error_kind_of([] { srgec::disjoint_cliques(1, 3); }), ErrorKind::ParameterRange);
  for (const auto& cls : srgec::multipartite_parts(3, 4).classes)
    EXPECT_TRUE(srgec::is_coclique(srgec::complete_multipartite(3, 4), cls));
}

TEST(TextFormats, DesignRoundTrip) {
  const auto d = srgec::bose_sts(15);
  std::stringstream ss;
  srgec::write_design(ss, d);
  const auto back = srgec::read_design(ss);
  EXPECT_EQ(back.m, d.m);
  EXPECT_EQ(back.ell, d.ell);
  EXPECT_EQ(back.blocks, d.blocks);
}

TEST(TextFormats, SquaresRoundTrip) {
  const auto ls = srgec::mols_prime(5, 3);
  std::stringstream ss;
  srgec::write_latin_squares(ss, ls);
  const auto back = srgec::read_latin_squares(ss);
  EXPECT_EQ(back.m, 5);
  EXPECT_EQ(back.squares, ls.squares);
}

TEST(TextFormats, PartitionRoundTripAndErrors) {
  const auto p = srgec::row_spread(4);
  std::stringstream ss;
  srgec::write_partition(ss, p);
  EXPECT_EQ(srgec::read_partition(ss), p);

  std::istringstream bad("spread 2\n0 1\n2 x\n");
  try {
    srgec::read_partition(bad);
    FAIL();
  } catch (const srgec::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.position(), 3u);
  }
  std::istringstream unknown("clique 1\n0\n");
  EXPECT_EQ(error_kind_of([&] { srgec::read_partition(unknown); }), ErrorKind::ParseError);
}

}  // namespace
