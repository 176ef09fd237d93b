#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "nilmult/witt.hpp"

using namespace nilmult;

namespace {

// Words of length n over d letters with no proper period, divided by n:
// the number of aperiodic necklaces.
std::uint64_t aperiodic_necklaces(unsigned n, unsigned d) {
  if (d == 0) return 0;
  std::vector<unsigned> w(n, 0);
  std::uint64_t primitive = 0;
  while (true) {
    bool periodic = false;
    for (unsigned t = 1; t < n && !periodic; ++t) {
      if (n % t) continue;
      bool same = true;
      for (unsigned i = t; i < n && same; ++i) same = w[i] == w[i - t];
      periodic = same;
    }
    if (!periodic) ++primitive;
    unsigned k = 0;
    while (k < n && ++w[k] == d) w[k++] = 0;
    if (k == n) break;
  }
  return primitive / n;
}

int mobius_naive(unsigned m) {
  int sign = 1;
  for (unsigned q = 2; q <= m; ++q) {
    if (m % q) continue;
    m /= q;
    if (m % q == 0) return 0;
    sign = -sign;
  }
  return sign;
}

}  // namespace

TEST(Mobius, MatchesNaiveFactorisation) {
  for (unsigned m = 1; m <= 500; ++m) EXPECT_EQ(mobius(m), mobius_naive(m)) << m;
}

TEST(Mobius, RejectsZero) { EXPECT_THROW(mobius(0), std::invalid_argument); }

TEST(Witt, TwoLetterTable) {
  const std::uint64_t expected[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
  for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(witt(n, 2), expected[n - 1]);
}

TEST(Witt, AgreesWithNecklaceCount) {
  for (unsigned d = 0; d <= 4; ++d)
    for (unsigned n = 1; n <= 8; ++n)
      EXPECT_EQ(witt(n, d), aperiodic_necklaces(n, d)) << n << "," << d;
}

TEST(Witt, KnownValues) {
  EXPECT_EQ(witt(3, 4), 20);
  EXPECT_EQ(witt(4, 3), 18);
  EXPECT_EQ(witt(1, 0), 0);
  EXPECT_EQ(witt(2, 1), 0);
  EXPECT_EQ(witt(1, 1), 1);
}

TEST(Witt, LargeValuesStayExact) {
  // (2^61 - 2) / 61 for prime weight 61.
  const BigInt two61 = ipow(BigInt(2), 61);
  EXPECT_EQ(witt(61, 2), (two61 - 2) / 61);
  EXPECT_GT(witt(80, 7), BigInt(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_THROW(witt_u64(80, 7), std::overflow_error);
}

TEST(Witt, RejectsZeroWeight) { EXPECT_THROW(witt(0, 3), std::invalid_argument); }
