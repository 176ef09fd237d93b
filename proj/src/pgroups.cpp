#include "nilmult/pgroups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nilmult/errors.hpp"
#include "nilmult/gamma.hpp"
#include "nilmult/witt.hpp"

namespace nilmult {

bool operator==(const Product& a, const Product& b) {
  return a.factors == b.factors;
}

EsVariant default_variant(std::uint64_t p) {
  return p == 2 ? EsVariant::D8 : EsVariant::ExpP;
}

namespace {

void check_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void check_variant(std::uint64_t p, EsVariant v) {
  switch (v) {
    case EsVariant::D8:
      if (p != 2) throw std::invalid_argument("D8 requires p=2");
      break;
    case EsVariant::Q8:
      if (p != 2) throw std::invalid_argument("Q8 requires p=2");
      break;
    case EsVariant::ExpP:
      if (p == 2) throw std::invalid_argument("expP requires odd p");
      break;
    case EsVariant::ExpP2:
      if (p == 2) throw std::invalid_argument("expP2 requires odd p");
      break;
  }
}

}  // namespace

GroupDescriptor GroupDescriptor::abelian(FinAbelian g) {
  return GroupDescriptor(AbelianGroup{std::move(g)});
}

GroupDescriptor GroupDescriptor::extra_special(std::uint64_t p, unsigned m,
                                               EsVariant variant) {
  check_prime(p);
  if (m == 0) throw std::invalid_argument("m must be positive");
  check_variant(p, variant);
  return GroupDescriptor(ExtraSpecial{p, m, variant});
}

GroupDescriptor GroupDescriptor::gen_extra_special(
    std::uint64_t p, unsigned m, CenterKind center, unsigned rank,
    std::optional<EsVariant> variant) {
  check_prime(p);
  if (m == 0) throw std::invalid_argument("m must be positive");
  EsVariant v = variant.value_or(default_variant(p));
  check_variant(p, v);
  // E . Z_{p^2} does not depend on the type of E.
  if (center == CenterKind::Central) v = default_variant(p);
  return GroupDescriptor(GenExtraSpecial{p, m, center, rank, v});
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  std::vector<GroupDescriptor> flat;
  FinAbelian ab;
  bool has_abelian = false;
  std::vector<GroupDescriptor> stack(factors.rbegin(), factors.rend());
  while (!stack.empty()) {
    GroupDescriptor g = std::move(stack.back());
    stack.pop_back();
    if (auto* pr = std::get_if<Product>(&g.value_)) {
      for (auto it = pr->factors.rbegin(); it != pr->factors.rend(); ++it)
        stack.push_back(*it);
    } else if (auto* a = std::get_if<AbelianGroup>(&g.value_)) {
      ab += a->group;
      has_abelian = true;
    } else {
      flat.push_back(std::move(g));
    }
  }
  if (has_abelian) flat.push_back(abelian(std::move(ab)));
  if (flat.empty()) return abelian({});
  if (flat.size() == 1) return flat.front();
  return GroupDescriptor(Product{std::move(flat)});
}

BigInt GroupDescriptor::order() const {
  return std::visit(
      [](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbelianGroup>) {
          return v.group.order();
        } else if constexpr (std::is_same_v<T, ExtraSpecial>) {
          return ipow(BigInt(v.p), 2 * v.m + 1);
        } else if constexpr (std::is_same_v<T, GenExtraSpecial>) {
          const unsigned extra = v.center == CenterKind::Central ? 1 : 0;
          return ipow(BigInt(v.p), 2 * v.m + 1 + extra + v.rank);
        } else {
          BigInt n = 1;
          for (const auto& f : v.factors) n *= f.order();
          return n;
        }
      },
      value_);
}

BigInt GroupDescriptor::derived_order() const {
  return std::visit(
      [](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbelianGroup>) {
          return 1;
        } else if constexpr (std::is_same_v<T, Product>) {
          BigInt n = 1;
          for (const auto& f : v.factors) n *= f.derived_order();
          return n;
        } else {
          return BigInt(v.p);
        }
      },
      value_);
}

FinAbelian NonAbelianPart::abelianization() const {
  const unsigned r = kind == Kind::CentralProduct ? 2 * m + 1 : 2 * m;
  return FinAbelian::elementary(p, r);
}

Decomposition decompose(const GroupDescriptor& g) {
  Decomposition d;
  auto visit = [&](const auto& self, const GroupDescriptor& h) -> void {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, AbelianGroup>) {
            d.abelian += v.group;
          } else if constexpr (std::is_same_v<T, ExtraSpecial>) {
            d.parts.push_back({NonAbelianPart::Kind::ExtraSpecial, v.p, v.m,
                               v.variant});
          } else if constexpr (std::is_same_v<T, GenExtraSpecial>) {
            const auto kind = v.center == CenterKind::Split
                                  ? NonAbelianPart::Kind::ExtraSpecial
                                  : NonAbelianPart::Kind::CentralProduct;
            d.parts.push_back({kind, v.p, v.m, v.variant});
            d.abelian += FinAbelian::elementary(v.p, v.rank);
          } else {
            for (const auto& f : v.factors) self(self, f);
          }
        },
        h.value());
  };
  visit(visit, g);
  return d;
}

FinAbelian GroupDescriptor::abelianization() const {
  const auto d = decompose(*this);
  FinAbelian ab = d.abelian;
  for (const auto& part : d.parts) ab += part.abelianization();
  return ab;
}

std::vector<std::uint64_t> GroupDescriptor::primes() const {
  const auto d = decompose(*this);
  std::set<std::uint64_t> ps;
  for (auto p : d.abelian.primes()) ps.insert(p);
  for (const auto& part : d.parts) ps.insert(part.p);
  return {ps.begin(), ps.end()};
}

namespace {

std::uint64_t chi(unsigned weight, std::uint64_t letters) {
  return witt_u64(weight, letters);
}

MultiplierResult part_multiplier(const NonAbelianPart& part, unsigned c) {
  const std::uint64_t p = part.p;
  const unsigned m = part.m;
  MultiplierResult r;
  auto structure = [&](FinAbelian g, std::string tag) {
    r.order = g.order();
    r.structure = std::move(g);
    r.provenance = std::move(tag);
  };

  if (part.kind == NonAbelianPart::Kind::CentralProduct) {
    if (c == 1) {
      const std::uint64_t e = 2ULL * m * m + m - 1;
      r.order = ipow(BigInt(p), e);
      r.provenance = "Prop5.5";
    } else {
      FinAbelian shape = FinAbelian::cyclic(p, 2) +
                         FinAbelian::elementary(p, 2 * m - 1);
      structure(multiplier_abelian(shape, c), "Prop5.6");
    }
    return r;
  }

  if (c == 1) {
    if (m > 1) {
      structure(FinAbelian::elementary(p, 2ULL * m * m - m - 1), "Thm3.9(i)");
      return r;
    }
    switch (part.variant) {
      case EsVariant::ExpP:
        structure(FinAbelian::elementary(p, 2), "Thm3.9(ii)");
        break;
      case EsVariant::ExpP2:
        structure(FinAbelian{}, "Thm3.9(ii)");
        break;
      case EsVariant::D8:
        structure(FinAbelian::cyclic(2, 1), "Thm3.9(iii)");
        break;
      case EsVariant::Q8:
        structure(FinAbelian{}, "Thm3.9(iii)");
        break;
    }
    return r;
  }

  if (m > 1) {
    structure(FinAbelian::elementary(p, chi(c + 1, 2 * m)), "Thm3.14(i)");
    return r;
  }
  switch (part.variant) {
    case EsVariant::ExpP:
      structure(FinAbelian::elementary(p, chi(c + 1, 2) + chi(c + 2, 2)),
                "Thm3.14(ii)");
      break;
    case EsVariant::ExpP2:
      structure(FinAbelian::elementary(p, chi(c + 1, 2)), "Thm3.14(ii)");
      break;
    case EsVariant::Q8:
      structure(FinAbelian::elementary(2, chi(c + 1, 2)), "Thm3.14(iii)");
      break;
    case EsVariant::D8:
      structure(FinAbelian::cyclic(2, 2) +
                    FinAbelian::elementary(2, chi(c + 1, 2) - 1),
                "Thm3.14(iii)");
      break;
  }
  return r;
}

}  // namespace

MultiplierResult multiplier(const GroupDescriptor& g, unsigned c) {
  if (c == 0) throw std::invalid_argument("c must be positive");
  const auto d = decompose(g);

  struct Component {
    MultiplierResult m;
    FinAbelian ab;
  };
  std::vector<Component> comps;
  for (const auto& part : d.parts)
    comps.push_back({part_multiplier(part, c), part.abelianization()});
  if (!d.abelian.is_trivial() || comps.empty()) {
    FinAbelian m = multiplier_abelian(d.abelian, c);
    BigInt order = m.order();
    comps.push_back({{std::move(m), std::move(order), "Cor2.8"}, d.abelian});
  }
  if (comps.size() == 1) return comps.front().m;

  // Fold left: M(X x Y) = M(X) + M(Y) + Gamma(X^ab, Y^ab).
  MultiplierResult acc = comps.front().m;
  FinAbelian acc_ab = comps.front().ab;
  std::string tags = comps.front().m.provenance;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    const auto& next = comps[i];
    const FinAbelian corr = gamma(acc_ab, next.ab, c).group;
    if (acc.structure && next.m.structure) {
      acc.structure = *acc.structure + *next.m.structure + corr;
      acc.order = acc.structure->order();
    } else {
      acc.structure.reset();
      acc.order = acc.order * next.m.order * corr.order();
    }
    acc_ab += next.ab;
    tags += "," + next.m.provenance;
  }
  acc.provenance = "Prop2.6[" + tags + "]";
  return acc;
}

FinAbelian gamma_star_dihedral(unsigned n, unsigned c) {
  if (n < 2) throw std::invalid_argument("dihedral group needs n >= 2");
  if (c == 0) throw std::invalid_argument("c must be positive");
  FinAbelian g = normalize({n});
  if (n % 2 == 0) g += FinAbelian::elementary(2, chi(c + 1, 2) - 1);
  return g;
}

BigInt derived_order_bound(unsigned n, unsigned m, unsigned c) {
  if (m == 0) throw std::invalid_argument("bound: need |G'| = p^m with m >= 1");
  if (n <= m) throw std::invalid_argument("bound: need n > m");
  if (c < 2) throw std::invalid_argument("bound: need c >= 2");
  return witt(c + 1, n - m) + witt(c + 2, 2) +
         BigInt(m - 1) * ipow(BigInt(n - m), c);
}

bool attains_derived_order_bound(const GroupDescriptor& g, unsigned c) {
  if (c < 2) throw std::invalid_argument("bound: need c >= 2");
  const auto primes = g.primes();
  if (primes.size() != 1 || g.derived_order() != primes.front())
    throw std::invalid_argument("derived subgroup order is not p");
  const auto d = decompose(g);
  const auto& part = d.parts.front();
  return part.kind == NonAbelianPart::Kind::ExtraSpecial && part.m == 1 &&
         part.variant == EsVariant::ExpP && d.abelian.is_elementary();
}

CapabilityVerdict capability(const GroupDescriptor& g, unsigned c) {
  if (c == 0) throw std::invalid_argument("c must be positive");
  const auto d = decompose(g);
  const bool ges_shape =
      d.parts.size() == 1 && d.abelian.is_elementary() &&
      (d.abelian.is_trivial() || d.abelian.primes().front() == d.parts[0].p);
  if (!ges_shape)
    throw ClassNotCovered(
        "class not covered: capability is classified only for extra-special "
        "and generalized extra-special groups");
  const auto& part = d.parts.front();
  const bool capable = part.kind == NonAbelianPart::Kind::ExtraSpecial &&
                       part.m == 1 &&
                       (part.variant == EsVariant::ExpP ||
                        part.variant == EsVariant::D8);
  const bool plain_es = d.abelian.is_trivial() &&
                        part.kind == NonAbelianPart::Kind::ExtraSpecial;
  return {capable, capable, plain_es ? "Thm4.2" : "Thm5.8+Cor5.9"};
}

std::uint64_t log_p(const BigInt& x, std::uint64_t p) {
  if (x <= 0) throw std::domain_error("log_p of a non-positive number");
  BigInt y = x;
  std::uint64_t k = 0;
  while (y % p == 0) {
    y /= p;
    ++k;
  }
  if (y != 1) throw std::domain_error(x.str() + " is not a power of " + std::to_string(p));
  return k;
}

}  // namespace nilmult
