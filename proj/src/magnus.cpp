#include "nilmult/magnus.hpp"

#include <stdexcept>

namespace nilmult {

TruncatedSeries::TruncatedSeries(std::size_t letters, unsigned max_degree)
    : letters_(letters), max_degree_(max_degree) {
  offset_.resize(max_degree + 2);
  width_.resize(max_degree + 1);
  std::size_t off = 0;
  std::size_t w = 1;
  for (unsigned k = 0; k <= max_degree; ++k) {
    offset_[k] = off;
    width_[k] = w;
    off += w;
    w *= letters;
  }
  offset_[max_degree + 1] = off;
  coeff_.assign(off, 0);
}

TruncatedSeries TruncatedSeries::one(std::size_t letters, unsigned max_degree) {
  TruncatedSeries s(letters, max_degree);
  s.coeff_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::letter_unit(std::size_t letters,
                                             unsigned max_degree,
                                             std::size_t i) {
  if (i >= letters) throw std::out_of_range("letter index");
  TruncatedSeries s = one(letters, max_degree);
  if (max_degree >= 1) s.coeff_[s.offset_[1] + i] = 1;
  return s;
}

std::span<const BigInt> TruncatedSeries::homogeneous(unsigned k) const {
  if (k > max_degree_) throw std::out_of_range("degree above truncation");
  return {coeff_.data() + offset_[k], width_[k]};
}

std::span<BigInt> TruncatedSeries::homogeneous(unsigned k) {
  if (k > max_degree_) throw std::out_of_range("degree above truncation");
  return {coeff_.data() + offset_[k], width_[k]};
}

unsigned TruncatedSeries::valuation() const {
  for (unsigned k = 1; k <= max_degree_; ++k)
    for (const auto& c : homogeneous(k))
      if (c != 0) return k;
  return max_degree_ + 1;
}

bool TruncatedSeries::is_one() const {
  return coeff_[0] == 1 && valuation() > max_degree_;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.letters_ != b.letters_ || a.max_degree_ != b.max_degree_)
    throw std::invalid_argument("series over different algebras");
  TruncatedSeries out(a.letters_, a.max_degree_);
  const unsigned top = a.max_degree_;
  for (unsigned da = 0; da <= top; ++da) {
    const auto ha = a.homogeneous(da);
    for (std::size_t ia = 0; ia < ha.size(); ++ia) {
      if (ha[ia] == 0) continue;
      for (unsigned db = 0; da + db <= top; ++db) {
        const auto hb = b.homogeneous(db);
        auto dst = out.homogeneous(da + db);
        const std::size_t base = ia * hb.size();
        for (std::size_t ib = 0; ib < hb.size(); ++ib)
          if (hb[ib] != 0) dst[base + ib] += ha[ia] * hb[ib];
      }
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::unit_inverse() const {
  if (coeff_[0] != 1) throw std::domain_error("series is not a unit of the form 1 + u");
  // (1 + u)^{-1} = sum_k (-u)^k; u is nilpotent of order > max_degree.
  TruncatedSeries neg_u = *this;
  neg_u.coeff_[0] = 0;
  for (std::size_t i = 1; i < neg_u.coeff_.size(); ++i)
    neg_u.coeff_[i] = -neg_u.coeff_[i];
  TruncatedSeries result = one(letters_, max_degree_);
  TruncatedSeries term = one(letters_, max_degree_);
  for (unsigned k = 1; k <= max_degree_; ++k) {
    term = term * neg_u;
    for (std::size_t i = 0; i < result.coeff_.size(); ++i)
      result.coeff_[i] += term.coeff_[i];
  }
  return result;
}

TruncatedSeries TruncatedSeries::unit_pow(const BigInt& e) const {
  TruncatedSeries base = e < 0 ? unit_inverse() : *this;
  BigInt n = e < 0 ? BigInt(-e) : e;
  TruncatedSeries result = one(letters_, max_degree_);
  while (n > 0) {
    if ((n & 1) != 0) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace nilmult
