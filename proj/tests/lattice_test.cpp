#include <gtest/gtest.h>

#include "nilmult/lattice.hpp"

using namespace nilmult;

namespace {

IntMatrix m(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix out;
  for (auto r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

TEST(Lattice, HermiteReducesAbovePivots) {
  EXPECT_EQ(hermite_form(m({{2, 2}, {0, 2}}), 2), m({{2, 0}, {0, 2}}));
  EXPECT_EQ(hermite_form(m({{0, -3}, {4, 1}, {8, 2}}), 2), m({{4, 1}, {0, 3}}));
}

TEST(Lattice, EqualityViaHermiteForm) {
  IntLattice a(2, m({{2, 0}, {0, 2}}));
  IntLattice b(2, m({{2, 2}, {0, 2}}));
  EXPECT_TRUE(lattice_equal(a, b));
  EXPECT_FALSE(lattice_equal(a, IntLattice(2, m({{1, 1}, {0, 2}}))));
  EXPECT_TRUE(lattice_equal(a, IntLattice::scaled_identity(2, 2)));
}

TEST(Lattice, SmithQuotientOfDiagonal) {
  const auto q = smith_quotient(IntLattice::scaled_identity(2, 5));
  EXPECT_EQ(q.torsion, FinAbelian::elementary(5, 2));
  EXPECT_EQ(q.free_rank, 0u);
}

TEST(Lattice, SmithQuotientOfEmptyRows) {
  const auto q = smith_quotient(IntLattice(1, {}));
  EXPECT_TRUE(q.torsion.is_trivial());
  EXPECT_EQ(q.free_rank, 1u);
}

TEST(Lattice, SmithDiagonalDivisibilityChain) {
  // diag(4, 6) has Smith form diag(2, 12).
  const auto d = smith_diagonal(m({{4, 0}, {0, 6}}), 2);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0], 2);
  EXPECT_EQ(d[1], 12);
  const auto q = smith_quotient(IntLattice(2, m({{4, 0}, {0, 6}})));
  EXPECT_EQ(q.torsion, normalize({4, 6}));
}

TEST(Lattice, IndexIsDeterminant) {
  IntLattice l(3, m({{1, 2, 3}, {0, 4, 5}, {0, 0, 6}, {1, 6, 8}}));
  EXPECT_EQ(l.index(), 24);
  EXPECT_EQ(smith_quotient(l).torsion.order(), 24);
  EXPECT_EQ(IntLattice(2, m({{1, 0}})).index(), 0);
}
