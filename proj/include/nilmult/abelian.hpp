#pragma once

// Finite abelian groups in primary decomposition, and the c-nilpotent
// multiplier of a finite abelian group.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilmult/bigint.hpp"

namespace nilmult {

/// A finite abelian group stored canonically as, for each prime p, the
/// multiset of cyclic factors Z_{p^e} (exponent -> multiplicity, exponents
/// descending). The trivial group has no components.
class FinAbelian {
 public:
  using Stratum = std::map<unsigned, BigInt, std::greater<>>;

  FinAbelian() = default;

  static FinAbelian cyclic(std::uint64_t p, unsigned e, const BigInt& mult = 1);
  static FinAbelian elementary(std::uint64_t p, const BigInt& rank);
  /// Z_{p^m1} + ... + Z_{p^mk}; exponents in any order, zeros ignored.
  static FinAbelian from_exponents(std::uint64_t p,
                                   std::span<const unsigned> exponents);

  const std::map<std::uint64_t, Stratum>& components() const {
    return components_;
  }
  bool is_trivial() const { return components_.empty(); }
  bool is_p_group() const { return components_.size() <= 1; }
  /// Every factor has prime order.
  bool is_elementary() const;
  std::vector<std::uint64_t> primes() const;

  BigInt order() const;
  /// Number of cyclic factors at p.
  BigInt rank(std::uint64_t p) const;
  /// Total number of cyclic factors.
  BigInt rank() const;
  /// Descending exponent partition at p (expanded; throws std::length_error
  /// if the rank does not fit in memory-reasonable bounds).
  std::vector<unsigned> exponents(std::uint64_t p) const;

  FinAbelian& operator+=(const FinAbelian& other);
  friend FinAbelian operator+(FinAbelian a, const FinAbelian& b) {
    a += b;
    return a;
  }
  friend bool operator==(const FinAbelian&, const FinAbelian&) = default;

  /// "Z(2^2) + Z(2)^3 + Z(3)"; the trivial group renders as "0".
  std::string render() const;

 private:
  void add(std::uint64_t p, unsigned e, const BigInt& mult);
  std::map<std::uint64_t, Stratum> components_;
};

/// Prime factorisation by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(const BigInt& n);

/// Primary decomposition of Z_{n1} + ... + Z_{nk}. Rejects order 0.
FinAbelian normalize(std::span<const BigInt> orders);
FinAbelian normalize(std::initializer_list<std::uint64_t> orders);

/// Invariant factors n1, n2, ... with n_{i+1} | n_i.
std::vector<BigInt> invariant_factors(const FinAbelian& g);

FinAbelian tensor(const FinAbelian& a, const FinAbelian& b);

/// b (x) q (x) ... (x) q with c copies of q.
FinAbelian iterated_tensor(const FinAbelian& b, const FinAbelian& q,
                           unsigned c);

/// c-nilpotent multiplier of a finite abelian group, prime by prime: with
/// exponents m1 >= ... >= mk the factor Z_{p^{m_i}} appears with multiplicity
/// witt(c+1, i) - witt(c+1, i-1) for i >= 2.
FinAbelian multiplier_abelian(const FinAbelian& g, unsigned c);

/// The same multiplier from invariant factors n1, n2, ... (n_{i+1} | n_i):
/// Z_{n_i} with multiplicity witt(c+1, i) - witt(c+1, i-1), i >= 2.
FinAbelian multiplier_invariant_factors(std::span<const BigInt> factors,
                                        unsigned c);

/// Exponent of p in |M^(c)(G)| for G with exponent partition m1 >= ... >= mk.
/// Rejects non-descending or non-positive input.
BigInt s_function(std::span<const unsigned> exponents, unsigned c);

inline constexpr unsigned kDefaultPartitionCeiling = 20;

/// Partitions of n in descending lexicographic order, parts descending.
std::vector<std::vector<unsigned>> partitions(unsigned n);

struct PartitionValue {
  std::vector<unsigned> partition;
  BigInt value;
};

struct AbelianMaximum {
  /// All partitions attaining the maximum of s_function.
  std::vector<PartitionValue> best;
  /// All partitions with m1 >= 2 attaining the maximum among those; empty for
  /// n = 1.
  std::vector<PartitionValue> best_non_elementary;
};

/// Exhaustive scan of s_function over the partitions of n. Throws
/// ResourceLimitError when n exceeds `ceiling`.
AbelianMaximum max_abelian(unsigned n, unsigned c,
                           unsigned ceiling = kDefaultPartitionCeiling);

}  // namespace nilmult
