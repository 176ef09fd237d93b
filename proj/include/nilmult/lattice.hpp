#pragma once

#include <cstddef>
#include <vector>

#include "nilmult/abelian.hpp"
#include "nilmult/bigint.hpp"

namespace nilmult {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form: echelon rows with positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_form(IntMatrix rows, std::size_t cols);

/// Nonzero Smith invariants d1 | d2 | ... of the matrix (absolute values).
std::vector<BigInt> smith_diagonal(IntMatrix rows, std::size_t cols);

/// Subgroup of Z^n given by the row span of an integer matrix.
class IntLattice {
 public:
  IntLattice(std::size_t ambient_rank, IntMatrix rows);

  /// p * Z^n
  static IntLattice scaled_identity(std::size_t ambient_rank, const BigInt& p);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const IntMatrix& rows() const { return rows_; }
  const IntMatrix& hermite() const { return hermite_; }
  std::size_t rank() const { return hermite_.size(); }

  /// |Z^n / L| when finite, 0 otherwise.
  BigInt index() const;

 private:
  std::size_t ambient_rank_;
  IntMatrix rows_;
  IntMatrix hermite_;
};

bool lattice_equal(const IntLattice& a, const IntLattice& b);

struct SmithQuotient {
  FinAbelian torsion;
  std::size_t free_rank = 0;
};

/// Structure of Z^n / L.
SmithQuotient smith_quotient(const IntLattice& lattice);

}  // namespace nilmult
