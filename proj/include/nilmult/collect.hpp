#pragma once

// Free nilpotent groups F / gamma_{W+1}(F) on d generators.
//
// Elements are kept in collected normal form: b_1^{e_1} b_2^{e_2} ... b_N^{e_N}
// over the Hall basis in ascending basis order, with integer exponents.
// Products are formed by collection from the left against a conjugation
// table a_k^{-s} a_l a_k^{s} (l > k, s = +-1). Table entries are computed on
// demand through the Magnus embedding and memoised.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "nilmult/abelian.hpp"
#include "nilmult/bigint.hpp"
#include "nilmult/hall.hpp"
#include "nilmult/lattice.hpp"
#include "nilmult/magnus.hpp"

namespace nilmult {

struct CollectLimits {
  /// Maximum number of syllables consumed by a single collection.
  std::uint64_t max_syllables = 20'000'000;
  std::uint64_t max_basis = kDefaultBasisCeiling;
};

class NilGroupCtx;

class NilWord {
 public:
  const NilGroupCtx& ctx() const { return *ctx_; }
  const std::vector<BigInt>& exponents() const { return exponents_; }
  bool is_identity() const;

  /// "x1^2 [x2,x1]^-1", or "1" for the identity.
  std::string render() const;

  friend bool operator==(const NilWord& a, const NilWord& b) {
    return a.ctx_ == b.ctx_ && a.exponents_ == b.exponents_;
  }

 private:
  friend class NilGroupCtx;
  NilWord(std::shared_ptr<const NilGroupCtx> ctx, std::vector<BigInt> e)
      : ctx_(std::move(ctx)), exponents_(std::move(e)) {}

  std::shared_ptr<const NilGroupCtx> ctx_;
  std::vector<BigInt> exponents_;
};

class NilGroupCtx : public std::enable_shared_from_this<NilGroupCtx> {
 public:
  /// Free nilpotent group of class `nilpotency_class` on `letters` generators.
  static std::shared_ptr<const NilGroupCtx> create(std::size_t letters,
                                                   unsigned nilpotency_class,
                                                   CollectLimits limits = {});

  const HallBasis& basis() const { return basis_; }
  std::size_t letters() const { return basis_.letters(); }
  unsigned nilpotency_class() const { return basis_.max_weight(); }
  const CollectLimits& limits() const { return limits_; }

  NilWord identity() const;
  NilWord generator(std::size_t i) const;
  /// The basis element as a group element: unit exponent vector.
  NilWord basis_element(std::size_t i) const;
  NilWord from_exponents(std::vector<BigInt> exponents) const;

  /// Image under the Magnus embedding.
  TruncatedSeries embed(const NilWord& w) const;
  /// Normal form of an embedded element. Throws std::domain_error if the
  /// series is not in the image of the group.
  NilWord from_series(const TruncatedSeries& s) const;

  using Syllable = std::pair<std::size_t, BigInt>;
  /// Collected normal form of a_k^{-sign} a_l a_k^{sign} for l > k as
  /// ascending syllables.
  const std::vector<Syllable>& conjugate(std::size_t l, std::size_t k,
                                         int sign) const;

 private:
  NilGroupCtx(std::size_t letters, unsigned nilpotency_class,
              CollectLimits limits);

  struct WeightSolver;
  void build_solvers();
  std::vector<BigInt> solve_weight(unsigned w,
                                   std::span<const BigInt> lie_part) const;

  CollectLimits limits_;
  HallBasis basis_;
  std::vector<TruncatedSeries> units_;
  std::vector<TruncatedSeries> inverse_units_;
  std::vector<std::shared_ptr<const WeightSolver>> solvers_;

  mutable std::mutex table_mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<Syllable>>
      table_[2];
};

NilWord multiply(const NilWord& a, const NilWord& b);
NilWord inverse(const NilWord& a);
/// a^{-1} b^{-1} a b
NilWord commutator(const NilWord& a, const NilWord& b);
NilWord power(const NilWord& a, const BigInt& e);

/// Product computed by multiplying Magnus images; independent of collection.
NilWord multiply_via_embedding(const NilWord& a, const NilWord& b);

/// Exponents over the weight lo..hi strata: coordinates of w in
/// gamma_lo / gamma_{hi+1}. Throws NotInGammaError when w has a nonzero
/// exponent of weight < lo.
IntVector graded_image(const NilWord& w, unsigned lo, unsigned hi);

inline constexpr unsigned kDefaultMaxVerifyClass = 3;

struct E1Verification {
  std::uint64_t p = 0;
  unsigned c = 0;
  bool holds = false;
  /// Cokernel of the generated sublattice.
  FinAbelian quotient;
  std::size_t free_rank = 0;
  /// |ambient / generated| (0 if infinite) against the expected p^rank.
  BigInt lattice_index;
  BigInt expected_index;
  /// Ambient coordinates: the basic commutators of weights c+1 and c+2.
  std::vector<std::string> coordinates;
  IntMatrix generators;
  IntMatrix hermite;
};

/// Checks that the iterated commutators of the relators of
/// <x, y | x^p, y^p, [y,x]^p, [y,x,y], [y,x,x]> with c or c+1 letters span
/// exactly p times the lattice gamma_{c+1}(F) / gamma_{c+3}(F). Throws
/// ResourceLimitError for c above `max_class`.
E1Verification verify_e1_congruence(std::uint64_t p, unsigned c,
                                    CollectLimits limits = {},
                                    unsigned max_class = kDefaultMaxVerifyClass);

}  // namespace nilmult
