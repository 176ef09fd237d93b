#include "nilmult/descriptor_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "nilmult/errors.hpp"

namespace nilmult {

std::string variant_name(EsVariant v) {
  switch (v) {
    case EsVariant::ExpP: return "expP";
    case EsVariant::ExpP2: return "expP2";
    case EsVariant::D8: return "D8";
    case EsVariant::Q8: return "Q8";
  }
  return "?";
}

namespace {

struct Token {
  enum Kind { Word, Number, Punct, End } kind = End;
  std::string text;
  std::size_t offset = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : src_(s) { advance(); }

  GroupDescriptor group() {
    std::vector<GroupDescriptor> factors;
    factors.push_back(term());
    while (tok_.kind == Token::Word && tok_.text == "x") {
      advance();
      factors.push_back(term());
    }
    if (tok_.kind != Token::End) fail("unexpected trailing input", tok_);
    if (factors.size() == 1) return std::move(factors.front());
    return GroupDescriptor::product(std::move(factors));
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    std::ostringstream os;
    os << msg << " at offset " << t.offset;
    if (t.kind == Token::End)
      os << " (end of input)";
    else
      os << " near '" << t.text << "'";
    throw ParseError(os.str(), t.offset);
  }

  void advance() {
    std::size_t i = pos_;
    while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i])))
      ++i;
    tok_ = Token{};
    tok_.offset = i;
    if (i == src_.size()) {
      pos_ = i;
      return;
    }
    const char ch = src_[i];
    std::size_t j = i + 1;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j])))
        ++j;
      tok_.kind = Token::Number;
    } else if (ch == 'x') {
      // The product sign; "Ab(3;1)xAb(3;1)" needs no spaces.
      tok_.kind = Token::Word;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (j < src_.size() && std::isalnum(static_cast<unsigned char>(src_[j])))
        ++j;
      tok_.kind = Token::Word;
    } else {
      tok_.kind = Token::Punct;
    }
    tok_.text = std::string(src_.substr(i, j - i));
    pos_ = j;
  }

  void expect(char c) {
    if (tok_.kind != Token::Punct || tok_.text[0] != c)
      fail(std::string("expected '") + c + "'", tok_);
    advance();
  }

  std::uint64_t number() {
    if (tok_.kind != Token::Number) fail("expected a number", tok_);
    std::uint64_t v = 0;
    const auto* b = tok_.text.data();
    const auto r = std::from_chars(b, b + tok_.text.size(), v);
    if (r.ec != std::errc{}) fail("number out of range", tok_);
    advance();
    return v;
  }

  unsigned small(std::uint64_t limit = 1u << 20) {
    const Token t = tok_;
    const std::uint64_t v = number();
    if (v > limit) fail("number too large", t);
    return static_cast<unsigned>(v);
  }

  std::uint64_t prime() {
    const Token t = tok_;
    const std::uint64_t p = number();
    if (!is_prime(p)) fail(std::to_string(p) + " is not prime", t);
    return p;
  }

  EsVariant variant(std::uint64_t p) {
    const Token t = tok_;
    if (t.kind != Token::Word) fail("expected a type (expP, expP2, D8, Q8)", t);
    EsVariant v;
    if (t.text == "expP") v = EsVariant::ExpP;
    else if (t.text == "expP2") v = EsVariant::ExpP2;
    else if (t.text == "D8") v = EsVariant::D8;
    else if (t.text == "Q8") v = EsVariant::Q8;
    else fail("unknown type", t);
    if ((v == EsVariant::D8 || v == EsVariant::Q8) && p != 2)
      fail(t.text + " requires p=2", t);
    if ((v == EsVariant::ExpP || v == EsVariant::ExpP2) && p == 2)
      fail(t.text + " requires odd p", t);
    advance();
    return v;
  }

  GroupDescriptor term() {
    const Token head = tok_;
    if (head.kind != Token::Word) fail("expected Ab, ES, GES or Zp", head);
    advance();
    expect('(');
    if (head.text == "Ab") {
      const std::uint64_t p = prime();
      expect(';');
      std::vector<unsigned> exps{small(4096)};
      while (tok_.kind == Token::Punct && tok_.text == ",") {
        advance();
        exps.push_back(small(4096));
      }
      expect(')');
      FinAbelian g;
      for (unsigned e : exps)
        if (e > 0) g += FinAbelian::cyclic(p, e);
      return GroupDescriptor::abelian(std::move(g));
    }
    if (head.text == "Zp") {
      const std::uint64_t p = prime();
      expect(',');
      const unsigned e = small(4096);
      expect(')');
      return GroupDescriptor::abelian(e ? FinAbelian::cyclic(p, e) : FinAbelian{});
    }
    if (head.text == "ES") {
      const std::uint64_t p = prime();
      expect(';');
      const Token mt = tok_;
      const unsigned m = small();
      if (m == 0) fail("m must be positive", mt);
      expect(';');
      const EsVariant v = variant(p);
      expect(')');
      return GroupDescriptor::extra_special(p, m, v);
    }
    if (head.text == "GES") {
      const std::uint64_t p = prime();
      expect(';');
      const Token mt = tok_;
      const unsigned m = small();
      if (m == 0) fail("m must be positive", mt);
      expect(';');
      const Token ct = tok_;
      CenterKind center;
      if (ct.kind == Token::Word && ct.text == "split") center = CenterKind::Split;
      else if (ct.kind == Token::Word && ct.text == "central") center = CenterKind::Central;
      else fail("expected split or central", ct);
      advance();
      expect(';');
      const unsigned rank = small();
      std::optional<EsVariant> v;
      if (tok_.kind == Token::Punct && tok_.text == ";") {
        advance();
        v = variant(p);
      }
      expect(')');
      return GroupDescriptor::gen_extra_special(p, m, center, rank, v);
    }
    fail("unknown group kind", head);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_;
};

void format_abelian(std::ostream& os, const FinAbelian& g) {
  if (g.is_trivial()) {
    os << "Ab(2;0)";
    return;
  }
  bool first = true;
  for (std::uint64_t p : g.primes()) {
    if (!first) os << " x ";
    first = false;
    os << "Ab(" << p << ';';
    const auto exps = g.exponents(p);
    for (std::size_t i = 0; i < exps.size(); ++i)
      os << (i ? "," : "") << exps[i];
    os << ')';
  }
}

void format(std::ostream& os, const GroupDescriptor& g) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbelianGroup>) {
          format_abelian(os, v.group);
        } else if constexpr (std::is_same_v<T, ExtraSpecial>) {
          os << "ES(" << v.p << ';' << v.m << ';' << variant_name(v.variant)
             << ')';
        } else if constexpr (std::is_same_v<T, GenExtraSpecial>) {
          os << "GES(" << v.p << ';' << v.m << ';'
             << (v.center == CenterKind::Split ? "split" : "central") << ';'
             << v.rank;
          if (v.variant != default_variant(v.p)) os << ';' << variant_name(v.variant);
          os << ')';
        } else {
          for (std::size_t i = 0; i < v.factors.size(); ++i) {
            if (i) os << " x ";
            format(os, v.factors[i]);
          }
        }
      },
      g.value());
}

}  // namespace

GroupDescriptor parse_descriptor(std::string_view text) {
  try {
    return Parser(text).group();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_descriptor(const GroupDescriptor& g) {
  std::ostringstream os;
  format(os, g);
  return os.str();
}

}  // namespace nilmult
