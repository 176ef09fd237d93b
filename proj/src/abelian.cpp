#include "nilmult/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nilmult/errors.hpp"
#include "nilmult/witt.hpp"

namespace nilmult {

namespace {

constexpr std::uint64_t kMaxExpandedRank = 1U << 20;

std::uint64_t narrow_rank(const BigInt& r) {
  if (r > kMaxExpandedRank)
    throw std::length_error("rank " + r.str() + " too large to expand");
  return static_cast<std::uint64_t>(r);
}

// witt(c+1, i) - witt(c+1, i-1), counted in blocks.
BigInt witt_step(unsigned c, std::uint64_t from, std::uint64_t to) {
  return witt(c + 1, to) - witt(c + 1, from);
}

}  // namespace

FinAbelian FinAbelian::cyclic(std::uint64_t p, unsigned e, const BigInt& mult) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  FinAbelian g;
  g.add(p, e, mult);
  return g;
}

FinAbelian FinAbelian::elementary(std::uint64_t p, const BigInt& rank) {
  return cyclic(p, 1, rank);
}

FinAbelian FinAbelian::from_exponents(std::uint64_t p,
                                      std::span<const unsigned> exponents) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  FinAbelian g;
  for (unsigned e : exponents) g.add(p, e, 1);
  return g;
}

void FinAbelian::add(std::uint64_t p, unsigned e, const BigInt& mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity");
  if (e == 0 || mult == 0) return;
  components_[p][e] += mult;
}

bool FinAbelian::is_elementary() const {
  for (const auto& [p, stratum] : components_)
    if (stratum.size() != 1 || stratum.begin()->first != 1) return false;
  return true;
}

std::vector<std::uint64_t> FinAbelian::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& [p, _] : components_) out.push_back(p);
  return out;
}

BigInt FinAbelian::order() const {
  BigInt n = 1;
  for (const auto& [p, stratum] : components_) {
    BigInt exp = 0;
    for (const auto& [e, mult] : stratum) exp += mult * e;
    n *= ipow(BigInt(p), static_cast<std::uint64_t>(exp));
  }
  return n;
}

BigInt FinAbelian::rank(std::uint64_t p) const {
  auto it = components_.find(p);
  if (it == components_.end()) return 0;
  BigInt r = 0;
  for (const auto& [e, mult] : it->second) r += mult;
  return r;
}

BigInt FinAbelian::rank() const {
  BigInt r = 0;
  for (const auto& [p, _] : components_) r += rank(p);
  return r;
}

std::vector<unsigned> FinAbelian::exponents(std::uint64_t p) const {
  std::vector<unsigned> out;
  auto it = components_.find(p);
  if (it == components_.end()) return out;
  for (const auto& [e, mult] : it->second)
    out.insert(out.end(), narrow_rank(mult), e);
  return out;
}

FinAbelian& FinAbelian::operator+=(const FinAbelian& other) {
  for (const auto& [p, stratum] : other.components_)
    for (const auto& [e, mult] : stratum) add(p, e, mult);
  return *this;
}

std::string FinAbelian::render() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, stratum] : components_) {
    for (const auto& [e, mult] : stratum) {
      if (!first) os << " + ";
      first = false;
      os << "Z(" << p;
      if (e > 1) os << '^' << e;
      os << ')';
      if (mult > 1) os << '^' << mult;
    }
  }
  return os.str();
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  BigInt m = n;
  for (std::uint64_t q = 2; BigInt(q) * q <= m; ++q) {
    unsigned e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  }
  if (m > 1) {
    if (m > std::numeric_limits<std::uint64_t>::max())
      throw std::domain_error("factorize: prime factor exceeds 64 bits");
    out.emplace_back(static_cast<std::uint64_t>(m), 1);
  }
  return out;
}

FinAbelian normalize(std::span<const BigInt> orders) {
  FinAbelian g;
  for (const auto& n : orders) {
    if (n <= 0) throw std::invalid_argument("cyclic order must be positive");
    for (auto [p, e] : factorize(n)) g += FinAbelian::cyclic(p, e);
  }
  return g;
}

FinAbelian normalize(std::initializer_list<std::uint64_t> orders) {
  std::vector<BigInt> v(orders.begin(), orders.end());
  return normalize(v);
}

std::vector<BigInt> invariant_factors(const FinAbelian& g) {
  std::vector<BigInt> out;
  for (const auto& [p, stratum] : g.components()) {
    std::size_t i = 0;
    for (unsigned e : g.exponents(p)) {
      if (i == out.size()) out.push_back(1);
      out[i++] *= ipow(BigInt(p), e);
    }
  }
  return out;
}

FinAbelian tensor(const FinAbelian& a, const FinAbelian& b) {
  FinAbelian out;
  for (const auto& [p, sa] : a.components()) {
    auto it = b.components().find(p);
    if (it == b.components().end()) continue;
    for (const auto& [ea, ma] : sa)
      for (const auto& [eb, mb] : it->second)
        out += FinAbelian::cyclic(p, std::min(ea, eb), ma * mb);
  }
  return out;
}

FinAbelian iterated_tensor(const FinAbelian& b, const FinAbelian& q,
                           unsigned c) {
  if (c == 0) throw std::invalid_argument("iterated_tensor: c must be positive");
  FinAbelian out = b;
  for (unsigned i = 0; i < c; ++i) out = tensor(out, q);
  return out;
}

FinAbelian multiplier_abelian(const FinAbelian& g, unsigned c) {
  if (c == 0) throw std::invalid_argument("multiplier: c must be positive");
  FinAbelian out;
  for (const auto& [p, stratum] : g.components()) {
    // Positions s+1..s+mult carry exponent e; positions >= 2 contribute.
    std::uint64_t s = 0;
    for (const auto& [e, mult] : stratum) {
      const std::uint64_t m = narrow_rank(mult);
      out += FinAbelian::cyclic(p, e, witt_step(c, s, s + m));
      s += m;
    }
  }
  return out;
}

FinAbelian multiplier_invariant_factors(std::span<const BigInt> factors,
                                        unsigned c) {
  if (c == 0) throw std::invalid_argument("multiplier: c must be positive");
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] <= 0 || factors[i - 1] % factors[i] != 0)
      throw std::invalid_argument("invariant factors must satisfy n_{i+1} | n_i");
  FinAbelian out;
  for (std::size_t i = 2; i <= factors.size(); ++i) {
    const BigInt mult = witt_step(c, i - 1, i);
    for (auto [p, e] : factorize(factors[i - 1]))
      out += FinAbelian::cyclic(p, e, mult);
  }
  return out;
}

BigInt s_function(std::span<const unsigned> exponents, unsigned c) {
  if (c == 0) throw std::invalid_argument("s_function: c must be positive");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0)
      throw std::invalid_argument("s_function: exponents must be positive");
    if (i > 0 && exponents[i] > exponents[i - 1])
      throw std::invalid_argument("s_function: exponents must be descending");
  }
  BigInt s = 0;
  for (std::size_t i = 2; i <= exponents.size(); ++i)
    s += witt_step(c, i - 1, i) * exponents[i - 1];
  return s;
}

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  if (n == 0) return {{}};
  std::vector<unsigned> current{n};
  for (;;) {
    out.push_back(current);
    // Next partition in descending lexicographic order.
    unsigned ones = 0;
    while (!current.empty() && current.back() == 1) {
      current.pop_back();
      ++ones;
    }
    if (current.empty()) break;
    const unsigned k = --current.back();
    unsigned rest = ones + 1;
    while (rest > k) {
      current.push_back(k);
      rest -= k;
    }
    if (rest > 0) current.push_back(rest);
  }
  return out;
}

AbelianMaximum max_abelian(unsigned n, unsigned c, unsigned ceiling) {
  if (n == 0) throw std::invalid_argument("max_abelian: n must be positive");
  if (n > ceiling)
    throw ResourceLimitError("partition scan of n = " + std::to_string(n) +
                             " exceeds ceiling " + std::to_string(ceiling));
  AbelianMaximum result;
  BigInt best = -1;
  BigInt best_ne = -1;
  for (auto& part : partitions(n)) {
    BigInt v = s_function(part, c);
    if (v > best) {
      best = v;
      result.best.clear();
    }
    if (v == best) result.best.push_back({part, v});
    if (part.front() >= 2) {
      if (v > best_ne) {
        best_ne = v;
        result.best_non_elementary.clear();
      }
      if (v == best_ne) result.best_non_elementary.push_back({part, v});
    }
  }
  return result;
}

}  // namespace nilmult
