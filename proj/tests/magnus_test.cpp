#include <gtest/gtest.h>

#include "nilmult/magnus.hpp"

using namespace nilmult;

TEST(Magnus, UnitInverse) {
  auto x = TruncatedSeries::letter_unit(2, 5, 0);
  auto y = TruncatedSeries::letter_unit(2, 5, 1);
  auto u = x * y * x;
  EXPECT_TRUE((u * u.unit_inverse()).is_one());
  EXPECT_TRUE((u.unit_inverse() * u).is_one());
}

TEST(Magnus, InverseOfLetterIsAlternatingSeries) {
  auto x = TruncatedSeries::letter_unit(1, 4, 0).unit_inverse();
  for (unsigned k = 1; k <= 4; ++k)
    EXPECT_EQ(x.homogeneous(k)[0], (k % 2) ? -1 : 1);
}

TEST(Magnus, PowersAreBinomial) {
  auto x = TruncatedSeries::letter_unit(1, 6, 0).unit_pow(5);
  const long binom[] = {5, 10, 10, 5, 1, 0};
  for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(x.homogeneous(k)[0], binom[k - 1]);
  auto y = TruncatedSeries::letter_unit(2, 4, 1);
  EXPECT_EQ(y.unit_pow(-3) * y.unit_pow(3), TruncatedSeries::one(2, 4));
}

TEST(Magnus, CommutatorStartsInDegreeTwo) {
  auto x = TruncatedSeries::letter_unit(2, 4, 0);
  auto y = TruncatedSeries::letter_unit(2, 4, 1);
  auto c = x.unit_inverse() * y.unit_inverse() * x * y;
  EXPECT_EQ(c.valuation(), 2u);
  // X1 X2 - X2 X1: words indexed 0*2+1 and 1*2+0.
  auto h = c.homogeneous(2);
  EXPECT_EQ(h[1], 1);
  EXPECT_EQ(h[2], -1);
  EXPECT_EQ(h[0], 0);
  EXPECT_EQ(h[3], 0);
}
