#include <gtest/gtest.h>

#include <random>

#include "nilmult/collect.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/pgroups.hpp"
#include "nilmult/witt.hpp"

using namespace nilmult;

namespace {

NilWord random_word(const NilGroupCtx& ctx, std::mt19937& rng, int length) {
  std::uniform_int_distribution<std::size_t> letter(0, ctx.letters() - 1);
  std::uniform_int_distribution<int> exp(-2, 2);
  NilWord w = ctx.identity();
  for (int i = 0; i < length; ++i)
    w = multiply(w, power(ctx.generator(letter(rng)), exp(rng)));
  return w;
}

struct Shape {
  std::size_t d;
  unsigned w;
};

class GroupAxioms : public ::testing::TestWithParam<Shape> {};

}  // namespace

TEST(Collect, IdentityAndGeneratorsRender) {
  auto ctx = NilGroupCtx::create(2, 3);
  EXPECT_EQ(ctx->identity().render(), "1");
  EXPECT_TRUE(ctx->identity().is_identity());
  auto w = multiply(power(ctx->generator(0), 2),
                    inverse(commutator(ctx->generator(1), ctx->generator(0))));
  EXPECT_EQ(w.render(), "x1^2 [x2,x1]^-1");
}

TEST(Collect, SwappingGeneratorsIntroducesCommutator) {
  auto ctx = NilGroupCtx::create(2, 4);
  auto x = ctx->generator(0), y = ctx->generator(1);
  // y x = x y [y,x]
  EXPECT_EQ(multiply(y, x).render(), "x1 x2 [x2,x1]");
}

TEST(Collect, BasisElementsAreTheirOwnNormalForm) {
  for (auto [d, w] : {Shape{2, 6}, Shape{3, 4}}) {
    auto ctx = NilGroupCtx::create(d, w);
    const auto& b = ctx->basis();
    for (std::size_t i = d; i < b.size(); ++i) {
      auto c = commutator(ctx->basis_element(b.left_index(i)),
                          ctx->basis_element(b.right_index(i)));
      EXPECT_EQ(c, ctx->basis_element(i)) << b[i].render();
      const auto [lo, hi] = b.stratum(b[i].weight());
      const auto g = graded_image(c, b[i].weight(), w);
      for (std::size_t k = 0; k < g.size(); ++k)
        EXPECT_EQ(g[k], k + lo == i ? 1 : 0);
      (void)hi;
    }
  }
}

TEST_P(GroupAxioms, HoldOnRandomWords) {
  const auto [d, w] = GetParam();
  auto ctx = NilGroupCtx::create(d, w);
  std::mt19937 rng(1234 + 17 * d + w);
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    auto a = random_word(*ctx, rng, 8);
    auto b = random_word(*ctx, rng, 8);
    auto c = random_word(*ctx, rng, 8);
    ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    ASSERT_TRUE(multiply(a, inverse(a)).is_identity());
    ASSERT_TRUE(multiply(inverse(a), a).is_identity());
    ASSERT_EQ(multiply(a, ctx->identity()), a);
    ASSERT_EQ(multiply(ctx->identity(), a), a);
  }
}

TEST_P(GroupAxioms, CollectionAgreesWithEmbedding) {
  const auto [d, w] = GetParam();
  auto ctx = NilGroupCtx::create(d, w);
  std::mt19937 rng(99 + d * w);
  for (int t = 0; t < 100; ++t) {
    auto a = random_word(*ctx, rng, 10);
    auto b = random_word(*ctx, rng, 10);
    ASSERT_EQ(multiply(a, b), multiply_via_embedding(a, b));
    ASSERT_EQ(ctx->from_series(ctx->embed(a)), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Shapes, GroupAxioms,
                         ::testing::Values(Shape{2, 2}, Shape{2, 4},
                                           Shape{2, 6}, Shape{3, 3},
                                           Shape{3, 4}),
                         [](const auto& info) {
                           return "d" + std::to_string(info.param.d) + "_w" +
                                  std::to_string(info.param.w);
                         });

TEST(Collect, PowersAddExponentsOnCentralElements) {
  auto ctx = NilGroupCtx::create(2, 3);
  const auto& b = ctx->basis();
  const auto idx = *b.index_of(BasicCommutator::bracket(
      BasicCommutator::letter(b.alphabet_ptr(), 1),
      BasicCommutator::letter(b.alphabet_ptr(), 0)));
  for (std::uint64_t p : {2, 3, 5}) {
    auto g = graded_image(power(ctx->basis_element(idx), p), 2, 2);
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0], p);
  }
}

TEST(Collect, GradedImageOfIdentityIsZero) {
  auto ctx = NilGroupCtx::create(2, 3);
  for (const auto& v : graded_image(ctx->identity(), 1, 3)) EXPECT_EQ(v, 0);
}

TEST(Collect, GradedImageRejectsLowWeight) {
  auto ctx = NilGroupCtx::create(2, 3);
  EXPECT_THROW(graded_image(ctx->generator(0), 2, 3), NotInGammaError);
}

TEST(Collect, LargeExponentsStayExact) {
  auto ctx = NilGroupCtx::create(2, 3);
  const BigInt big = ipow(BigInt(10), 30);
  auto a = power(ctx->generator(0), big);
  auto b = power(ctx->generator(1), big);
  auto ab = multiply(b, a);
  EXPECT_EQ(ab, multiply_via_embedding(b, a));
  // Only the weight-2 coordinate is convention independent: [y,x]^(N^2).
  EXPECT_EQ(ab.exponents()[2], big * big);
}

TEST(Collect, SyllableCeilingRefuses) {
  CollectLimits limits;
  limits.max_syllables = 10;
  auto ctx = NilGroupCtx::create(2, 5, limits);
  auto w = ctx->identity();
  EXPECT_THROW(
      {
        for (int i = 0; i < 20; ++i)
          w = multiply(w, multiply(ctx->generator(1), ctx->generator(0)));
      },
      ResourceLimitError);
}

TEST(VerifyE1, OddPrimesHold) {
  for (std::uint64_t p : {3, 5}) {
    const auto v = verify_e1_congruence(p, 2);
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.quotient, FinAbelian::elementary(p, 5));
    EXPECT_EQ(v.free_rank, 0u);
    EXPECT_EQ(v.lattice_index, v.expected_index);
  }
  const auto v = verify_e1_congruence(5, 3);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.quotient, FinAbelian::elementary(5, 9));
  EXPECT_EQ(v.coordinates.size(), 9u);
}

TEST(VerifyE1, QuotientMatchesMultiplierTable) {
  for (std::uint64_t p : {3, 5})
    for (unsigned c : {2, 3}) {
      auto e1 = GroupDescriptor::extra_special(p, 1, EsVariant::ExpP);
      EXPECT_EQ(verify_e1_congruence(p, c).quotient, *multiplier(e1, c).structure);
    }
}

TEST(VerifyE1, PrimeTwoPresentsD8) {
  // x^2 = y^2 = [y,x]^2 = 1 of class 2 is D8; the quotient is its multiplier,
  // not Z_2^(chi_{c+1}(2) + chi_{c+2}(2)).
  auto d8 = GroupDescriptor::extra_special(2, 1, EsVariant::D8);
  for (unsigned c : {2, 3}) {
    const auto v = verify_e1_congruence(2, c);
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.quotient, *multiplier(d8, c).structure);
  }
}

TEST(VerifyE1, Preconditions) {
  EXPECT_THROW(verify_e1_congruence(4, 2), std::invalid_argument);
  EXPECT_THROW(verify_e1_congruence(3, 1), std::invalid_argument);
  EXPECT_THROW(verify_e1_congruence(3, 4), ResourceLimitError);
  EXPECT_NO_THROW(verify_e1_congruence(3, 4, {}, 4));
}
