#include "nilmult/gamma.hpp"

#include <stdexcept>

namespace nilmult {

namespace {

// Cyclic factors of g as single-factor groups, canonical order.
std::vector<FinAbelian> cyclic_factors(const FinAbelian& g) {
  std::vector<FinAbelian> out;
  for (const auto& [p, stratum] : g.components())
    for (unsigned e : g.exponents(p)) out.push_back(FinAbelian::cyclic(p, e));
  return out;
}

}  // namespace

GammaResult gamma(const FinAbelian& a, const FinAbelian& b, unsigned c,
                  std::uint64_t ceiling) {
  if (c == 0) throw std::invalid_argument("gamma: c must be positive");
  GammaResult result;
  const auto fa = cyclic_factors(a);
  const auto fb = cyclic_factors(b);
  if (fa.empty() || fb.empty()) return result;

  auto alphabet = std::make_shared<Alphabet>();
  for (std::size_t i = 0; i < fa.size(); ++i)
    alphabet->labels.push_back("a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < fb.size(); ++i)
    alphabet->labels.push_back("b" + std::to_string(i + 1));
  result.letter_groups = fa;
  result.letter_groups.insert(result.letter_groups.end(), fb.begin(), fb.end());

  const HallBasis basis = generate(alphabet, c + 1, ceiling);
  const auto [first, last] = basis.stratum(c + 1);
  for (std::size_t i = first; i < last; ++i) {
    const auto& bc = basis[i];
    if (!is_mixed(bc, fa.size())) continue;
    GammaTermReport t{bc, 0, 0, {}};
    bool started = false;
    for (std::size_t letter = 0; letter < bc.content().size(); ++letter) {
      for (unsigned k = 0; k < bc.content()[letter]; ++k) {
        const auto& g = result.letter_groups[letter];
        t.term = started ? tensor(t.term, g) : g;
        started = true;
        (letter < fa.size() ? t.a_slots : t.b_slots) += 1;
      }
    }
    if (t.term.is_trivial()) continue;
    result.group += t.term;
    result.terms.push_back(std::move(t));
  }
  return result;
}

FinAbelian gamma_two_letter(const FinAbelian& a, const FinAbelian& b,
                            unsigned c) {
  if (c == 0) throw std::invalid_argument("gamma: c must be positive");
  const HallBasis basis = generate(2, c + 1);
  const auto [first, last] = basis.stratum(c + 1);
  FinAbelian out;
  for (std::size_t i = first; i < last; ++i) {
    const auto& content = basis[i].content();
    FinAbelian term = content[0] > 0 ? a : b;
    unsigned na = content[0], nb = content[1];
    (content[0] > 0 ? na : nb) -= 1;
    for (; na > 0; --na) term = tensor(term, a);
    for (; nb > 0; --nb) term = tensor(term, b);
    out += term;
  }
  return out;
}

FinAbelian multiplier_direct_product(const FinAbelian& mg,
                                     const FinAbelian& mh,
                                     const FinAbelian& gab,
                                     const FinAbelian& hab, unsigned c) {
  return mg + mh + gamma(gab, hab, c).group;
}

}  // namespace nilmult
