#include "nilmult/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace nilmult {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_widths(const IntMatrix& rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols)
      throw std::invalid_argument("lattice row width differs from ambient rank");
}

// row[dst] -= q * row[src]
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t k = 0; k < m[dst].size(); ++k) m[dst][k] -= q * m[src][k];
}

void axpy_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  if (q == 0) return;
  for (auto& row : m) row[dst] -= q * row[src];
}

}  // namespace

IntMatrix hermite_form(IntMatrix m, std::size_t cols) {
  check_widths(m, cols);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    for (;;) {
      // Smallest nonzero |entry| at or below r becomes the pivot.
      std::size_t piv = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][col] != 0 &&
            (piv == m.size() || abs(m[i][col]) < abs(m[piv][col])))
          piv = i;
      if (piv == m.size()) break;
      std::swap(m[r], m[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        axpy_row(m, i, r, floor_div(m[i][col], m[r][col]));
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r == m.size() || m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i)
      axpy_row(m, i, r, floor_div(m[i][col], m[r][col]));
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<BigInt> smith_diagonal(IntMatrix m, std::size_t cols) {
  check_widths(m, cols);
  const std::size_t rows = m.size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: minimal nonzero |entry| in the trailing block.
    auto find_min = [&](std::size_t& pi, std::size_t& pj) {
      bool found = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
            found = true;
          }
      return found;
    };
    std::size_t pi = t, pj = t;
    if (!find_min(pi, pj)) break;
    for (;;) {
      std::swap(m[t], m[pi]);
      if (pj != t)
        for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        axpy_row(m, i, t, floor_div(m[i][t], m[t][t]));
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        axpy_col(m, j, t, floor_div(m[t][j], m[t][t]));
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder sits in row t or column t.
        pi = t;
        pj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (m[i][t] != 0 && abs(m[i][t]) < abs(m[pi][pj])) {
            pi = i;
            pj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[t][j] != 0 && abs(m[t][j]) < abs(m[pi][pj])) {
            pi = t;
            pj = j;
          }
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = 0; j < cols; ++j) m[t][j] += m[bad][j];
      pi = t;
      pj = t;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

IntLattice::IntLattice(std::size_t ambient_rank, IntMatrix rows)
    : ambient_rank_(ambient_rank), rows_(std::move(rows)) {
  check_widths(rows_, ambient_rank_);
  hermite_ = hermite_form(rows_, ambient_rank_);
}

IntLattice IntLattice::scaled_identity(std::size_t ambient_rank,
                                       const BigInt& p) {
  IntMatrix rows(ambient_rank, IntVector(ambient_rank, 0));
  for (std::size_t i = 0; i < ambient_rank; ++i) rows[i][i] = p;
  return IntLattice(ambient_rank, std::move(rows));
}

BigInt IntLattice::index() const {
  if (rank() < ambient_rank_) return 0;
  BigInt idx = 1;
  for (std::size_t i = 0; i < hermite_.size(); ++i) idx *= hermite_[i][i];
  return idx;
}

bool lattice_equal(const IntLattice& a, const IntLattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("lattice_equal: ambient ranks differ");
  return a.hermite() == b.hermite();
}

SmithQuotient smith_quotient(const IntLattice& lattice) {
  const auto diag = smith_diagonal(lattice.hermite(), lattice.ambient_rank());
  SmithQuotient q;
  q.free_rank = lattice.ambient_rank() - diag.size();
  std::vector<BigInt> torsion;
  for (const auto& d : diag)
    if (d > 1) torsion.push_back(d);
  q.torsion = normalize(torsion);
  return q;
}

}  // namespace nilmult
