#pragma once

// Truncated free associative algebra Z<X_1..X_d> / (degree > W). The map
// x_i -> 1 + X_i embeds the free nilpotent group F / gamma_{W+1}(F) into its
// group of units, with gamma_n(F) landing exactly on 1 + (degree >= n).

#include <cstddef>
#include <span>
#include <vector>

#include "nilmult/bigint.hpp"

namespace nilmult {

class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t letters, unsigned max_degree);

  static TruncatedSeries one(std::size_t letters, unsigned max_degree);
  /// 1 + X_i
  static TruncatedSeries letter_unit(std::size_t letters, unsigned max_degree,
                                     std::size_t i);

  std::size_t letters() const { return letters_; }
  unsigned max_degree() const { return max_degree_; }

  /// Coefficients of the degree-k monomials; word x_{i1}..x_{ik} sits at
  /// index sum i_j * d^(k-j).
  std::span<const BigInt> homogeneous(unsigned k) const;
  std::span<BigInt> homogeneous(unsigned k);

  /// Smallest k >= 1 with a nonzero degree-k part; max_degree + 1 if none.
  unsigned valuation() const;
  bool is_one() const;

  /// Inverse of a series with constant term 1.
  TruncatedSeries unit_inverse() const;
  /// Integer power of a series with constant term 1.
  TruncatedSeries unit_pow(const BigInt& e) const;

  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

 private:
  std::size_t letters_;
  unsigned max_degree_;
  std::vector<std::size_t> offset_;   // offset_[k] = start of degree k
  std::vector<std::size_t> width_;    // width_[k] = d^k
  std::vector<BigInt> coeff_;
};

}  // namespace nilmult
