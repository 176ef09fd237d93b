#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nilmult/errors.hpp"
#include "nilmult/hall.hpp"
#include "nilmult/witt.hpp"

using namespace nilmult;

namespace {

// Every bracketing of weight <= w over the alphabet (the free magma), kept
// only when the independent validator accepts it, in basis order.
std::vector<BasicCommutator> magma_oracle(std::size_t d, unsigned w) {
  auto alpha = Alphabet::standard(d);
  std::vector<std::vector<BasicCommutator>> by_weight(w + 1);
  for (std::size_t i = 0; i < d; ++i)
    by_weight[1].push_back(BasicCommutator::letter(alpha, i));
  for (unsigned n = 2; n <= w; ++n)
    for (unsigned a = 1; a < n; ++a)
      for (const auto& l : by_weight[a])
        for (const auto& r : by_weight[n - a]) {
          auto b = BasicCommutator::bracket(l, r);
          // Non-basic magma elements can still be children of nothing basic,
          // so only basic ones are kept to bound the search.
          if (is_basic(b)) by_weight[n].push_back(b);
        }
  std::vector<BasicCommutator> all;
  for (auto& v : by_weight) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(),
            [](const auto& x, const auto& y) { return compare(x, y) < 0; });
  return all;
}

}  // namespace

TEST(Hall, TwoLetterListing) {
  const auto b = generate(2, 4);
  std::vector<std::string> got;
  for (const auto& c : b.elements()) got.push_back(c.render());
  const std::vector<std::string> want = {
      "x1", "x2", "[x2,x1]", "[x2,x1,x1]", "[x2,x1,x2]",
      "[x2,x1,x1,x1]", "[x2,x1,x1,x2]", "[x2,x1,x2,x2]"};
  EXPECT_EQ(got, want);
}

TEST(Hall, NonLeftNormedRendering) {
  const auto b = generate(2, 5);
  std::set<std::string> names;
  for (const auto& c : b.elements()) names.insert(c.render());
  EXPECT_TRUE(names.count("[x2,x1,x1,[x2,x1]]"));
  EXPECT_TRUE(names.count("[x2,x1,x2,[x2,x1]]"));
}

TEST(Hall, MatchesFreeMagmaOracle) {
  for (auto [d, w] : {std::pair<std::size_t, unsigned>{2, 7}, {3, 5}, {4, 4}}) {
    const auto b = generate(d, w);
    const auto oracle = magma_oracle(d, w);
    ASSERT_EQ(b.size(), oracle.size()) << d << "," << w;
    for (std::size_t i = 0; i < oracle.size(); ++i)
      EXPECT_EQ(b[i].render(), oracle[i].render()) << i;
  }
}

TEST(Hall, StrataSizesAreWittNumbers) {
  for (std::size_t d = 0; d <= 4; ++d) {
    const auto b = generate(d, 8);
    for (unsigned n = 1; n <= 8; ++n) {
      const auto [lo, hi] = b.stratum(n);
      EXPECT_EQ(BigInt(hi - lo), witt(n, d)) << n << "," << d;
    }
  }
}

TEST(Hall, EveryElementIsBasicAndOrdered) {
  const auto b = generate(3, 6);
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_TRUE(is_basic(b[i]));
    if (i) EXPECT_TRUE(compare(b[i - 1], b[i]) < 0);
    EXPECT_EQ(b.index_of(b[i]), i);
  }
}

TEST(Hall, ChildIndices) {
  const auto b = generate(2, 4);
  for (std::size_t i = 2; i < b.size(); ++i) {
    EXPECT_EQ(b[b.left_index(i)], b[i].left());
    EXPECT_EQ(b[b.right_index(i)], b[i].right());
  }
}

TEST(Hall, ValidatorRejectsNonBasic) {
  auto a = Alphabet::standard(2);
  auto x1 = BasicCommutator::letter(a, 0), x2 = BasicCommutator::letter(a, 1);
  EXPECT_FALSE(is_basic(BasicCommutator::bracket(x1, x2)));
  EXPECT_FALSE(is_basic(BasicCommutator::bracket(x1, x1)));
  auto c = BasicCommutator::bracket(x2, x1);
  EXPECT_TRUE(is_basic(c));
  // [[x2,x1],x2] is basic; [[[x2,x1],x2],x1] is not (x1 < x2).
  auto c2 = BasicCommutator::bracket(c, x2);
  EXPECT_TRUE(is_basic(c2));
  EXPECT_FALSE(is_basic(BasicCommutator::bracket(c2, x1)));
}

TEST(Hall, ContentAndMixing) {
  const auto b = generate(3, 3);
  for (const auto& c : b.elements()) {
    unsigned total = 0;
    for (unsigned k : c.content()) total += k;
    EXPECT_EQ(total, c.weight());
  }
  auto a = Alphabet::standard(3);
  auto x1 = BasicCommutator::letter(a, 0), x3 = BasicCommutator::letter(a, 2);
  EXPECT_TRUE(is_mixed(BasicCommutator::bracket(x3, x1), 2));
  EXPECT_FALSE(is_mixed(x1, 1));
  EXPECT_FALSE(is_mixed(BasicCommutator::bracket(x3, x1), 3));
}

TEST(Hall, CompareRejectsForeignAlphabet) {
  auto a = BasicCommutator::letter(Alphabet::standard(2), 0);
  auto b = BasicCommutator::letter(Alphabet::standard(3), 0);
  EXPECT_THROW((void)compare(a, b), std::invalid_argument);
}

TEST(Hall, CeilingRefusesLargeEnumeration) {
  EXPECT_THROW(generate(4, 12, 1000), ResourceLimitError);
}
