#include "nilmult/collect.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilmult/errors.hpp"
#include "nilmult/witt.hpp"

namespace nilmult {

using Rational = boost::multiprecision::cpp_rational;

// Solves sum_i e_i P_i = h for the Lie polynomials P_i of one weight
// stratum, using an invertible square block on pivot columns.
struct NilGroupCtx::WeightSolver {
  std::size_t first = 0;                  // basis index of the stratum start
  std::vector<std::vector<BigInt>> lie;   // P_i, full monomial coordinates
  std::vector<std::size_t> pivots;        // chosen monomial columns
  std::vector<std::vector<Rational>> inv; // inverse of lie restricted to pivots
};

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Lie coordinate block");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

NilGroupCtx::NilGroupCtx(std::size_t letters, unsigned nilpotency_class,
                         CollectLimits limits)
    : limits_(limits),
      basis_(generate(letters, nilpotency_class, limits.max_basis)) {
  const unsigned top = nilpotency_class;
  units_.reserve(basis_.size());
  inverse_units_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].is_letter()) {
      units_.push_back(
          TruncatedSeries::letter_unit(letters, top, basis_[i].letter_index()));
    } else {
      const auto& u = units_[basis_.left_index(i)];
      const auto& v = units_[basis_.right_index(i)];
      const auto& ui = inverse_units_[basis_.left_index(i)];
      const auto& vi = inverse_units_[basis_.right_index(i)];
      units_.push_back(ui * vi * u * v);
    }
    inverse_units_.push_back(units_.back().unit_inverse());
  }
  build_solvers();
}

std::shared_ptr<const NilGroupCtx> NilGroupCtx::create(
    std::size_t letters, unsigned nilpotency_class, CollectLimits limits) {
  if (nilpotency_class == 0)
    throw std::invalid_argument("nilpotency class must be positive");
  return std::shared_ptr<const NilGroupCtx>(
      new NilGroupCtx(letters, nilpotency_class, limits));
}

void NilGroupCtx::build_solvers() {
  const unsigned top = nilpotency_class();
  solvers_.assign(top + 1, nullptr);
  for (unsigned w = 1; w <= top; ++w) {
    auto s = std::make_shared<WeightSolver>();
    const auto [first, last] = basis_.stratum(w);
    s->first = first;
    for (std::size_t i = first; i < last; ++i) {
      const auto h = units_[i].homogeneous(w);
      s->lie.emplace_back(h.begin(), h.end());
    }
    const std::size_t r = last - first;
    if (r > 0) {
      // Greedy column selection by rational elimination.
      const std::size_t width = s->lie.front().size();
      std::vector<std::vector<Rational>> reduced;  // echelon basis of columns
      std::vector<std::size_t> lead;
      for (std::size_t col = 0; col < width && s->pivots.size() < r; ++col) {
        std::vector<Rational> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = Rational(s->lie[i][col]);
        for (std::size_t b = 0; b < reduced.size(); ++b) {
          if (v[lead[b]] == 0) continue;
          const Rational f = v[lead[b]] / reduced[b][lead[b]];
          for (std::size_t i = 0; i < r; ++i) v[i] -= f * reduced[b][i];
        }
        auto nz = std::find_if(v.begin(), v.end(),
                               [](const Rational& x) { return x != 0; });
        if (nz == v.end()) continue;
        lead.push_back(static_cast<std::size_t>(nz - v.begin()));
        reduced.push_back(std::move(v));
        s->pivots.push_back(col);
      }
      if (s->pivots.size() != r)
        throw std::logic_error("Lie polynomials of a stratum are dependent");
      std::vector<std::vector<Rational>> block(r, std::vector<Rational>(r));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          block[i][j] = Rational(s->lie[i][s->pivots[j]]);
      s->inv = invert(std::move(block));
    }
    solvers_[w] = std::move(s);
  }
}

std::vector<BigInt> NilGroupCtx::solve_weight(
    unsigned w, std::span<const BigInt> lie_part) const {
  const auto& s = *solvers_[w];
  const std::size_t r = s.lie.size();
  std::vector<BigInt> e(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    Rational acc = 0;
    for (std::size_t k = 0; k < r; ++k)
      if (lie_part[s.pivots[k]] != 0)
        acc += Rational(lie_part[s.pivots[k]]) * s.inv[k][j];
    if (denominator(acc) != 1)
      throw std::domain_error("series is not in the image of the group");
    e[j] = numerator(acc);
  }
  for (std::size_t col = 0; col < lie_part.size(); ++col) {
    BigInt v = 0;
    for (std::size_t i = 0; i < r; ++i) v += e[i] * s.lie[i][col];
    if (v != lie_part[col])
      throw std::domain_error("series is not in the image of the group");
  }
  return e;
}

NilWord NilGroupCtx::identity() const {
  return NilWord(shared_from_this(), std::vector<BigInt>(basis_.size(), 0));
}

NilWord NilGroupCtx::generator(std::size_t i) const {
  if (i >= letters()) throw std::out_of_range("generator index");
  return basis_element(i);
}

NilWord NilGroupCtx::basis_element(std::size_t i) const {
  if (i >= basis_.size()) throw std::out_of_range("basis index");
  std::vector<BigInt> e(basis_.size(), 0);
  e[i] = 1;
  return NilWord(shared_from_this(), std::move(e));
}

NilWord NilGroupCtx::from_exponents(std::vector<BigInt> exponents) const {
  if (exponents.size() != basis_.size())
    throw std::invalid_argument("exponent vector length differs from basis size");
  return NilWord(shared_from_this(), std::move(exponents));
}

TruncatedSeries NilGroupCtx::embed(const NilWord& w) const {
  if (&w.ctx() != this) throw std::invalid_argument("word from another context");
  TruncatedSeries s = TruncatedSeries::one(letters(), nilpotency_class());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto& e = w.exponents()[i];
    if (e == 0) continue;
    s = s * (e > 0 ? units_[i] : inverse_units_[i]).unit_pow(abs(e));
  }
  return s;
}

NilWord NilGroupCtx::from_series(const TruncatedSeries& series) const {
  if (series.letters() != letters() ||
      series.max_degree() != nilpotency_class())
    throw std::invalid_argument("series over a different algebra");
  if (series.homogeneous(0)[0] != 1)
    throw std::domain_error("series is not in the image of the group");
  std::vector<BigInt> exps(basis_.size(), 0);
  TruncatedSeries g = series;
  for (unsigned w = 1; w <= nilpotency_class(); ++w) {
    if (g.valuation() < w) throw std::logic_error("stripping left a lower term");
    const auto [first, last] = basis_.stratum(w);
    const auto e = solve_weight(w, g.homogeneous(w));
    for (std::size_t i = first; i < last; ++i) {
      exps[i] = e[i - first];
      if (exps[i] != 0)
        g = (exps[i] > 0 ? inverse_units_[i] : units_[i]).unit_pow(abs(exps[i])) * g;
    }
  }
  if (!g.is_one()) throw std::logic_error("stripping did not reach the identity");
  return NilWord(shared_from_this(), std::move(exps));
}

const std::vector<NilGroupCtx::Syllable>& NilGroupCtx::conjugate(
    std::size_t l, std::size_t k, int sign) const {
  if (!(l > k && l < basis_.size()) || (sign != 1 && sign != -1))
    throw std::invalid_argument("conjugate: need l > k and sign = +-1");
  std::lock_guard lock(table_mutex_);
  auto& table = table_[sign > 0 ? 0 : 1];
  auto it = table.find({l, k});
  if (it != table.end()) return it->second;
  const auto& uk = sign > 0 ? units_[k] : inverse_units_[k];
  const auto& uk_inv = sign > 0 ? inverse_units_[k] : units_[k];
  const NilWord w = from_series(uk_inv * units_[l] * uk);
  std::vector<Syllable> syl;
  for (std::size_t i = 0; i < w.exponents().size(); ++i)
    if (w.exponents()[i] != 0) syl.emplace_back(i, w.exponents()[i]);
  return table.emplace(std::make_pair(l, k), std::move(syl)).first->second;
}

bool NilWord::is_identity() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](const BigInt& e) { return e == 0; });
}

std::string NilWord::render() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << ctx_->basis()[i].render();
    if (exponents_[i] != 1) os << '^' << exponents_[i];
  }
  return first ? "1" : os.str();
}

namespace {

using Syllable = NilGroupCtx::Syllable;

void check_same(const NilWord& a, const NilWord& b) {
  if (&a.ctx() != &b.ctx())
    throw std::invalid_argument("words from different contexts");
}

// Collection from the left. Multiplying a collected word
// head * a_j^{e_j} * tail by a_j^y gives head * a_j^{e_j + y} * tail', with
// tail' = a_j^{-y} tail a_j^y. Conjugation by a_j^{+-1} maps the subgroup
// on basis indices > j to itself, so tail' is collected recursively on
// strictly larger indices. Conjugation by a_j^y is applied as a composite of
// the doubled automorphisms phi^(2^i), whose images of basis elements are
// built from the conjugation table.
class Collector {
 public:
  using Vec = std::vector<BigInt>;

  explicit Collector(const NilGroupCtx& ctx)
      : ctx_(ctx),
        n_(ctx.basis().size()),
        top_(ctx.nilpotency_class()),
        limit_(ctx.limits().max_syllables) {}

  Vec mul(Vec a, const Vec& b) {
    for (std::size_t j = 0; j < n_; ++j)
      if (b[j] != 0) mul_gen_power(a, j, b[j]);
    return a;
  }

  Vec inv(const Vec& a) {
    Vec e(n_, 0);
    for (std::size_t i = n_; i-- > 0;)
      if (a[i] != 0) mul_gen_power(e, i, -a[i]);
    return e;
  }

  Vec pow(const Vec& a, const BigInt& y) {
    if (y == 0) return Vec(n_, 0);
    std::size_t nz = 0, first = n_;
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i] != 0) {
        ++nz;
        if (first == n_) first = i;
      }
    // Pairwise commuting support: the power is a scalar multiple.
    if (nz <= 1 || 2 * weight(first) > top_) {
      Vec r(n_, 0);
      for (std::size_t i = first; i < n_; ++i)
        if (a[i] != 0) r[i] = a[i] * y;
      return r;
    }
    Vec base = y < 0 ? inv(a) : a;
    BigInt k = abs(y);
    Vec result(n_, 0);
    while (k > 0) {
      if ((k & 1) != 0) result = mul(std::move(result), base);
      k >>= 1;
      if (k > 0) base = mul(base, base);
    }
    return result;
  }

 private:
  unsigned weight(std::size_t i) const { return ctx_.basis()[i].weight(); }

  void tick() {
    if (++steps_ > limit_)
      throw ResourceLimitError("collection blow-up: more than " +
                               std::to_string(limit_) + " syllables");
  }

  void mul_gen_power(Vec& e, std::size_t j, const BigInt& y) {
    tick();
    std::size_t top = n_;
    while (top > j + 1 && e[top - 1] == 0) --top;
    std::size_t low = j + 1;
    while (low < top && e[low] == 0) ++low;
    // a_j commutes with every tail element once the weights exceed the class.
    if (low < top && weight(j) + weight(low) <= top_) {
      Vec tail(n_, 0);
      for (std::size_t l = j + 1; l < top; ++l) {
        tail[l] = std::move(e[l]);
        e[l] = 0;
      }
      tail = conj_power(tail, j, y);
      for (std::size_t l = j + 1; l < n_; ++l) e[l] = std::move(tail[l]);
    }
    e[j] += y;
  }

  // Images of basis elements under phi^(s 2^i), phi(t) = a_j^{-1} t a_j.
  struct Doubling {
    std::size_t j;
    int s;
    std::vector<std::map<std::size_t, Vec>> images;
  };

  const Vec& image(Doubling& d, std::size_t i, std::size_t l) {
    if (d.images.size() <= i) d.images.resize(i + 1);
    auto it = d.images[i].find(l);
    if (it != d.images[i].end()) return it->second;
    Vec v(n_, 0);
    if (i == 0) {
      for (const auto& [g, x] : ctx_.conjugate(l, d.j, d.s)) v[g] += x;
    } else {
      Vec half = image(d, i - 1, l);
      v = apply(d, i - 1, half);
    }
    return d.images[i].emplace(l, std::move(v)).first->second;
  }

  Vec apply(Doubling& d, std::size_t i, const Vec& t) {
    Vec r(n_, 0);
    for (std::size_t l = d.j + 1; l < n_; ++l) {
      if (t[l] == 0) continue;
      const Vec img = image(d, i, l);
      r = mul(std::move(r), pow(img, t[l]));
    }
    return r;
  }

  Vec conj_power(const Vec& t, std::size_t j, const BigInt& y) {
    Doubling d{j, y > 0 ? 1 : -1, {}};
    BigInt k = abs(y);
    Vec r = t;
    for (std::size_t i = 0; k > 0; ++i, k >>= 1)
      if ((k & 1) != 0) r = apply(d, i, r);
    return r;
  }

  const NilGroupCtx& ctx_;
  std::size_t n_;
  unsigned top_;
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
};

}  // namespace

NilWord multiply(const NilWord& a, const NilWord& b) {
  check_same(a, b);
  Collector c(a.ctx());
  return a.ctx().from_exponents(c.mul(a.exponents(), b.exponents()));
}

NilWord inverse(const NilWord& a) {
  Collector c(a.ctx());
  return a.ctx().from_exponents(c.inv(a.exponents()));
}

NilWord commutator(const NilWord& a, const NilWord& b) {
  check_same(a, b);
  Collector c(a.ctx());
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  return a.ctx().from_exponents(c.mul(c.inv(c.mul(y, x)), c.mul(x, y)));
}

NilWord power(const NilWord& a, const BigInt& e) {
  Collector c(a.ctx());
  return a.ctx().from_exponents(c.pow(a.exponents(), e));
}

NilWord multiply_via_embedding(const NilWord& a, const NilWord& b) {
  check_same(a, b);
  const auto& ctx = a.ctx();
  return ctx.from_series(ctx.embed(a) * ctx.embed(b));
}

IntVector graded_image(const NilWord& w, unsigned lo, unsigned hi) {
  const auto& basis = w.ctx().basis();
  if (lo == 0 || lo > hi || hi > basis.max_weight())
    throw std::invalid_argument("graded_image: need 1 <= lo <= hi <= class");
  const std::size_t begin = basis.stratum(lo).first;
  const std::size_t end = basis.stratum(hi).second;
  for (std::size_t i = 0; i < begin; ++i)
    if (w.exponents()[i] != 0)
      throw NotInGammaError("not in gamma_" + std::to_string(lo) + ": exponent of " +
                            basis[i].render() + " is nonzero");
  return IntVector(w.exponents().begin() + static_cast<std::ptrdiff_t>(begin),
                   w.exponents().begin() + static_cast<std::ptrdiff_t>(end));
}

namespace {

void collect_rows(const NilWord& t, unsigned depth, unsigned c,
                  const std::vector<NilWord>& letters, IntMatrix& rows) {
  if (depth >= c) {
    auto v = graded_image(t, c + 1, c + 2);
    if (std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x != 0; }))
      rows.push_back(std::move(v));
  }
  if (depth == c + 1) return;
  for (const auto& v : letters)
    collect_rows(commutator(t, v), depth + 1, c, letters, rows);
}

}  // namespace

E1Verification verify_e1_congruence(std::uint64_t p, unsigned c,
                                    CollectLimits limits, unsigned max_class) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (c < 2) throw std::invalid_argument("verify-e1 needs c >= 2");
  if (c > max_class)
    throw ResourceLimitError("c = " + std::to_string(c) +
                             " exceeds the configured maximum " +
                             std::to_string(max_class));

  const auto ctx = NilGroupCtx::create(2, c + 2, limits);
  const NilWord x = ctx->generator(0);
  const NilWord y = ctx->generator(1);
  const NilWord yx = commutator(y, x);
  const std::vector<NilWord> relators{
      power(x, p), power(y, p), power(yx, p), commutator(yx, y),
      commutator(yx, x)};
  const std::vector<NilWord> letters{x, y};

  E1Verification out;
  out.p = p;
  out.c = c;
  const auto& basis = ctx->basis();
  const std::size_t begin = basis.stratum(c + 1).first;
  const std::size_t end = basis.stratum(c + 2).second;
  for (std::size_t i = begin; i < end; ++i)
    out.coordinates.push_back(basis[i].render());
  const std::size_t rank = end - begin;

  for (const auto& r : relators) collect_rows(r, 0, c, letters, out.generators);

  const IntLattice generated(rank, out.generators);
  const auto expected = IntLattice::scaled_identity(rank, p);
  out.hermite = generated.hermite();
  out.holds = lattice_equal(generated, expected);
  const auto q = smith_quotient(generated);
  out.quotient = q.torsion;
  out.free_rank = q.free_rank;
  out.lattice_index = generated.index();
  out.expected_index = expected.index();
  return out;
}

}  // namespace nilmult
