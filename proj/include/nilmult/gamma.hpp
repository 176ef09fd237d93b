#pragma once

// The correction term Gamma_{c+1}(A, B) in the c-nilpotent multiplier of a
// direct product, for finite abelian A and B.
//
// A and B are written as direct sums of cyclic groups of prime-power order,
// one letter per cyclic factor (A's letters a1 < a2 < ... before B's letters
// b1 < b2 < ...). Each basic commutator of weight c+1 on these letters that
// involves at least one a-letter and one b-letter contributes the tensor
// product of the cyclic factors at its letter slots.

#include <cstdint>
#include <vector>

#include "nilmult/abelian.hpp"
#include "nilmult/hall.hpp"

namespace nilmult {

struct GammaTermReport {
  BasicCommutator commutator;
  /// Number of slots carrying a factor of A, resp. of B.
  unsigned a_slots = 0;
  unsigned b_slots = 0;
  FinAbelian term;
};

struct GammaResult {
  FinAbelian group;
  /// Nontrivial terms, in basis order of their indexing commutators.
  std::vector<GammaTermReport> terms;
  /// Cyclic factors behind the letters: a1.., then b1...
  std::vector<FinAbelian> letter_groups;
};

GammaResult gamma(const FinAbelian& a, const FinAbelian& b, unsigned c,
                  std::uint64_t ceiling = kDefaultBasisCeiling);

/// Reading with a two-letter alphabet {a < b} whose slots carry the whole
/// groups A and B. Agrees with gamma() for c <= 2 only.
FinAbelian gamma_two_letter(const FinAbelian& a, const FinAbelian& b,
                            unsigned c);

/// M^(c)(G x H) = M^(c)(G) + M^(c)(H) + Gamma_{c+1}(G^ab, H^ab).
FinAbelian multiplier_direct_product(const FinAbelian& mg,
                                     const FinAbelian& mh,
                                     const FinAbelian& gab,
                                     const FinAbelian& hab, unsigned c);

}  // namespace nilmult
