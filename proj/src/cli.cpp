#include "nilmult/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <sstream>

#include "nilmult/abelian.hpp"
#include "nilmult/collect.hpp"
#include "nilmult/descriptor_io.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/gamma.hpp"
#include "nilmult/hall.hpp"
#include "nilmult/pgroups.hpp"
#include "nilmult/witt.hpp"

namespace nilmult::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string factored(const BigInt& n) {
  if (n == 1) return "1";
  std::string s;
  for (const auto& [p, e] : factorize(n)) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

Json order_json(const BigInt& n) {
  return Json{{"order", n.str()}, {"order_factored", factored(n)}};
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

struct Common {
  unsigned c = 2;
  bool json = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_multiplier(const Common& o, const std::string& text, std::ostream& out,
                   std::ostream& err) {
  const auto g = parse_descriptor(text);
  const auto d = decompose(g);
  for (const auto& part : d.parts)
    if (part.p == 2 && part.m > 1 &&
        part.kind == NonAbelianPart::Kind::ExtraSpecial)
      err << "note: the type " << variant_name(part.variant)
          << " does not affect the multiplier for m > 1\n";
  const auto r = multiplier(g, o.c);
  if (o.json) {
    Json m = Json::object();
    m["structure"] = r.structure ? Json(r.structure->render()) : Json(nullptr);
    m.update(order_json(r.order));
    emit(out, Json{{"command", "multiplier"},
                   {"group", format_descriptor(g)},
                   {"c", o.c},
                   {"multiplier", m},
                   {"provenance", r.provenance}});
  } else if (r.structure) {
    out << r.structure->render() << "  [" << r.provenance << "]\n";
  } else {
    out << "order " << factored(r.order) << "  [" << r.provenance << "]\n";
  }
  return 0;
}

int cmd_capability(const Common& o, const std::string& text, std::ostream& out) {
  const auto g = parse_descriptor(text);
  const auto v = capability(g, o.c);
  if (o.json) {
    emit(out, Json{{"command", "capability"},
                   {"group", format_descriptor(g)},
                   {"c", o.c},
                   {"capable", v.capable},
                   {"c_capable", v.c_capable},
                   {"provenance", v.reason}});
  } else {
    out << "capable: " << (v.capable ? "yes" : "no") << "; " << o.c
        << "-capable: " << (v.c_capable ? "yes" : "no") << "  [" << v.reason
        << "]\n";
  }
  return 0;
}

int cmd_bound(const Common& o, const std::string& text, unsigned n, unsigned m,
              std::ostream& out) {
  if (text.empty()) {
    if (n == 0 || m == 0)
      throw std::invalid_argument("bound needs --n and --m, or a descriptor");
    const BigInt b = derived_order_bound(n, m, o.c);
    if (o.json) {
      emit(out, Json{{"command", "bound"},
                     {"n", n},
                     {"m", m},
                     {"c", o.c},
                     {"bound_exponent", b.str()},
                     {"provenance", "Thm3.17"}});
    } else {
      out << "|M^(" << o.c << ")(G)| <= p^" << b << "  [Thm3.17]\n";
    }
    return 0;
  }
  const auto g = parse_descriptor(text);
  const bool attained = attains_derived_order_bound(g, o.c);
  const std::uint64_t p = g.primes().front();
  const auto gn = static_cast<unsigned>(log_p(g.order(), p));
  const BigInt b = derived_order_bound(gn, 1, o.c);
  const auto r = multiplier(g, o.c);
  const auto k = log_p(r.order, p);
  if (o.json) {
    emit(out, Json{{"command", "bound"},
                   {"group", format_descriptor(g)},
                   {"n", gn},
                   {"m", 1},
                   {"c", o.c},
                   {"bound_exponent", b.str()},
                   {"multiplier_exponent", std::to_string(k)},
                   {"attained", attained},
                   {"provenance", "Lemma3.16"}});
  } else {
    out << "|M^(" << o.c << ")(G)| = " << p << "^" << k << " <= " << p << "^"
        << b << "; attained: " << (attained ? "yes" : "no")
        << "  [Lemma3.16]\n";
  }
  return 0;
}

int cmd_witt(const Common& o, unsigned n, unsigned d, std::ostream& out) {
  if (n == 0) throw std::invalid_argument("witt needs --n >= 1");
  const BigInt w = witt(n, d);
  if (o.json)
    emit(out, Json{{"command", "witt"}, {"n", n}, {"d", d}, {"value", w.str()}});
  else
    out << w << '\n';
  return 0;
}

int cmd_hall(const Common& o, unsigned d, unsigned max_weight,
             std::uint64_t max_basis, std::ostream& out) {
  const auto basis = generate(d, max_weight, max_basis);
  if (o.json) {
    Json items = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i)
      items.push_back(Json{{"index", static_cast<std::uint64_t>(i + 1)},
                           {"weight", basis[i].weight()},
                           {"commutator", basis[i].render()}});
    emit(out, Json{{"command", "hall"},
                   {"d", d},
                   {"max_weight", max_weight},
                   {"basis", items}});
  } else {
    for (std::size_t i = 0; i < basis.size(); ++i)
      out << i + 1 << ' ' << basis[i].weight() << ' ' << basis[i].render()
          << '\n';
  }
  return 0;
}

FinAbelian abelian_operand(const std::string& text) {
  const auto g = parse_descriptor(text);
  const auto* a = std::get_if<AbelianGroup>(&g.value());
  if (!a) throw std::invalid_argument("gamma needs abelian operands: " + text);
  return a->group;
}

int cmd_gamma(const Common& o, const std::string& ta, const std::string& tb,
              std::uint64_t max_basis, std::ostream& out) {
  const FinAbelian a = abelian_operand(ta);
  const FinAbelian b = abelian_operand(tb);
  const auto r = gamma(a, b, o.c, max_basis);
  const auto& letters = r.letter_groups;
  const std::size_t na = [&] {
    std::size_t k = 0;
    for (const auto& [p, st] : a.components())
      for (const auto& [e, mult] : st) k += static_cast<std::size_t>(mult);
    return k;
  }();
  auto label = [&](std::size_t i) {
    return i < na ? "a" + std::to_string(i + 1)
                  : "b" + std::to_string(i - na + 1);
  };
  if (o.json) {
    Json ls = Json::array();
    for (std::size_t i = 0; i < letters.size(); ++i)
      ls.push_back(Json{{"letter", label(i)}, {"group", letters[i].render()}});
    Json terms = Json::array();
    for (const auto& t : r.terms) {
      Json j{{"commutator", t.commutator.render()},
             {"a_slots", t.a_slots},
             {"b_slots", t.b_slots},
             {"term", t.term.render()}};
      j.update(order_json(t.term.order()));
      terms.push_back(std::move(j));
    }
    Json total{{"structure", r.group.render()}};
    total.update(order_json(r.group.order()));
    emit(out, Json{{"command", "gamma"},
                   {"a", a.render()},
                   {"b", b.render()},
                   {"c", o.c},
                   {"letters", ls},
                   {"terms", terms},
                   {"gamma", total},
                   {"provenance", "Prop2.6"}});
  } else {
    out << "letters:";
    for (std::size_t i = 0; i < letters.size(); ++i)
      out << ' ' << label(i) << '=' << letters[i].render();
    out << '\n';
    for (const auto& t : r.terms)
      out << t.commutator.render() << "  a:" << t.a_slots << " b:" << t.b_slots
          << "  " << t.term.render() << "  order " << factored(t.term.order())
          << '\n';
    out << "Gamma_" << o.c + 1 << " = " << r.group.render() << "  order "
        << factored(r.group.order()) << "  [Prop2.6]\n";
  }
  return 0;
}

int cmd_verify(const Common& o, std::uint64_t p, bool dump,
               const CollectLimits& limits, unsigned max_class,
               std::ostream& out) {
  if (o.c < 2) throw std::invalid_argument("verify-e1 needs --c >= 2");
  const auto v = verify_e1_congruence(p, o.c, limits, max_class);
  if (o.json) {
    Json j{{"command", "verify-e1"},
           {"p", p},
           {"c", o.c},
           {"holds", v.holds},
           {"quotient", v.quotient.render()},
           {"free_rank", v.free_rank},
           {"lattice_index", v.lattice_index.str()},
           {"expected_index", v.expected_index.str()},
           {"provenance", "Thm3.11"}};
    if (dump) {
      j["coordinates"] = v.coordinates;
      j["generators"] = matrix_json(v.generators);
      j["hermite"] = matrix_json(v.hermite);
    }
    emit(out, j);
    return 0;
  }
  out << "Theorem 3.11 " << (v.holds ? "holds" : "fails") << "; ";
  if (v.holds && p != 2)
    out << "M^(" << o.c << ")(E1) = " << v.quotient.render();
  else
    out << "quotient = " << v.quotient.render();
  if (v.free_rank) out << " + Z^" << v.free_rank;
  out << '\n';
  if (dump)
    out << Json{{"coordinates", v.coordinates},
                {"generators", matrix_json(v.generators)},
                {"hermite", matrix_json(v.hermite)}}
               .dump()
        << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"c-nilpotent multipliers of finite p-groups", "nilmult"};
  app.require_subcommand(1);

  Common common;
  std::string descriptor, second;
  unsigned n = 0, m = 0, d = 0, max_weight = 0;
  std::uint64_t p = 0;
  bool dump = false;
  CollectLimits limits;
  unsigned max_class = kDefaultMaxVerifyClass;
  std::function<int()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--c", common.c, "nilpotency class c (default 2)")
        ->check(CLI::Range(1u, 64u));
    sub->add_flag("--json", common.json, "emit JSON");
  };

  auto* mult = app.add_subcommand("multiplier", "c-nilpotent multiplier of a group");
  add_common(mult);
  mult->add_option("group", descriptor, "group descriptor")->required();
  mult->callback([&] { action = [&] { return cmd_multiplier(common, descriptor, out, err); }; });

  auto* cap = app.add_subcommand("capability", "capability and c-capability");
  add_common(cap);
  cap->add_option("group", descriptor, "group descriptor")->required();
  cap->callback([&] { action = [&] { return cmd_capability(common, descriptor, out); }; });

  auto* bnd = app.add_subcommand("bound", "order bound for |G| = p^n, |G'| = p^m");
  add_common(bnd);
  bnd->add_option("--n", n, "|G| = p^n");
  bnd->add_option("--m", m, "|G'| = p^m");
  bnd->add_option("group", descriptor, "group descriptor with |G'| = p");
  bnd->callback([&] { action = [&] { return cmd_bound(common, descriptor, n, m, out); }; });

  auto* wt = app.add_subcommand("witt", "number of basic commutators of weight n on d letters");
  add_common(wt);
  wt->add_option("--n", n, "weight")->required();
  wt->add_option("--d", d, "number of letters")->required();
  wt->callback([&] { action = [&] { return cmd_witt(common, n, d, out); }; });

  auto* hl = app.add_subcommand("hall", "list basic commutators");
  add_common(hl);
  hl->add_option("--d", d, "number of letters")->required();
  hl->add_option("--max-weight", max_weight, "largest weight")->required();
  hl->add_option("--max-basis", limits.max_basis, "basis size ceiling");
  hl->callback([&] { action = [&] { return cmd_hall(common, d, max_weight, limits.max_basis, out); }; });

  auto* gm = app.add_subcommand("gamma", "correction term Gamma_{c+1}(A, B)");
  add_common(gm);
  gm->add_option("A", descriptor, "abelian descriptor")->required();
  gm->add_option("B", second, "abelian descriptor")->required();
  gm->add_option("--max-basis", limits.max_basis, "basis size ceiling");
  gm->callback([&] { action = [&] { return cmd_gamma(common, descriptor, second, limits.max_basis, out); }; });

  auto* ve = app.add_subcommand("verify-e1", "collection check of the E1 congruence");
  add_common(ve);
  ve->add_option("--p", p, "prime")->required();
  ve->add_flag("--dump-lattice", dump, "emit generators and Hermite form as JSON");
  ve->add_option("--max-basis", limits.max_basis, "basis size ceiling");
  ve->add_option("--max-syllables", limits.max_syllables, "collection length ceiling");
  ve->add_option("--max-class", max_class, "largest c attempted");
  ve->callback([&] { action = [&] { return cmd_verify(common, p, dump, limits, max_class, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "refused: " << e.what() << '\n';
    return 1;
  } catch (const ClassNotCovered& e) {
    err << "refused: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace nilmult::cli
