#include "telescope/summand_parser.hpp"

#include "lexer.hpp"
#include "telescope/errors.hpp"

namespace telescope {
namespace {

using detail::TokenCursor;
using detail::TokenKind;

bool is_constant(const LinForm& l) { return l.a == 0 && l.b == 0; }

class SummandParser {
 public:
  explicit SummandParser(std::string_view text) : cur_(text) {}

  HyperTerm parse() {
    if (cur_.at_end()) {
      cur_.fail("expected a summand");
    }
    if (cur_.accept('-')) {
      constant_ = -constant_;
    }
    factor();
    while (cur_.accept('*')) {
      factor();
    }
    if (!cur_.at_end()) {
      cur_.fail("expected '*' or end of summand");
    }
    return HyperTerm(sign_, constant_, factors_);
  }

 private:
  void factor() {
    if (cur_.is_punct('(') && cur_.is_punct('-', 1) && cur_.peek(2).kind == TokenKind::number &&
        cur_.peek(2).text == "1" && cur_.is_punct(')', 3)) {
      for (int i = 0; i < 4; ++i) {
        cur_.next();
      }
      cur_.expect('^');
      sign_ = sign_ + sign_exponent();
      return;
    }
    const auto& t = cur_.peek();
    if (t.kind == TokenKind::ident) {
      const std::string name = cur_.next().text;
      Factor f;
      if (name == "binom") {
        f.kind = FactorKind::binomial;
        cur_.expect('(');
        f.arg = lin();
        cur_.expect(',');
        f.bottom = lin();
        cur_.expect(')');
      } else if (name == "catalan" || name == "factorial") {
        f.kind = name == "catalan" ? FactorKind::catalan : FactorKind::factorial;
        cur_.expect('(');
        f.arg = lin();
        cur_.expect(')');
      } else {
        throw ParseError(t.pos, "unknown factor '" + name + "' (expected binom, catalan or factorial)");
      }
      f.exponent = optional_power();
      factors_.push_back(f);
      return;
    }
    if (t.kind == TokenKind::number || cur_.is_punct('-')) {
      constant_ *= constant_literal().pow(optional_power());
      return;
    }
    cur_.fail("expected a factor");
  }

  Rational constant_literal() {
    const bool negative = cur_.accept('-');
    if (cur_.peek().kind != TokenKind::number) {
      cur_.fail("expected an integer");
    }
    Integer num(cur_.next().text);
    Integer den = 1;
    if (cur_.accept('/')) {
      const auto& d = cur_.peek();
      if (d.kind != TokenKind::number) {
        cur_.fail("expected a denominator");
      }
      den = Integer(cur_.next().text);
      if (den == 0) {
        throw ParseError(d.pos, "zero denominator");
      }
    }
    return Rational(negative ? Integer(-num) : num, den);
  }

  int optional_power() {
    if (!cur_.accept('^')) {
      return 1;
    }
    const bool paren = cur_.accept('(');
    const bool negative = cur_.accept('-');
    const auto& t = cur_.peek();
    if (t.kind != TokenKind::number) {
      cur_.fail("expected an integer exponent");
    }
    const int e = std::stoi(cur_.next().text);
    if (paren) {
      cur_.expect(')');
    }
    if (e == 0) {
      throw ParseError(t.pos, "zero exponent");
    }
    return negative ? -e : e;
  }

  LinForm sign_exponent() {
    const auto& t = cur_.peek();
    if (t.kind == TokenKind::number) {
      return LinForm{0, 0, std::stoll(cur_.next().text)};
    }
    if (t.kind == TokenKind::ident) {
      return lin_atom();
    }
    if (cur_.accept('(')) {
      LinForm l = lin();
      cur_.expect(')');
      return l;
    }
    cur_.fail("expected a sign exponent");
  }

  LinForm lin() {
    LinForm acc;
    if (cur_.accept('-')) {
      acc = LinForm{} - lin_product();
    } else {
      cur_.accept('+');
      acc = lin_product();
    }
    while (true) {
      if (cur_.accept('+')) {
        acc = acc + lin_product();
      } else if (cur_.accept('-')) {
        acc = acc - lin_product();
      } else {
        return acc;
      }
    }
  }

  LinForm lin_product() {
    LinForm acc = lin_atom();
    while (cur_.is_punct('*') && !ends_argument()) {
      const std::size_t pos = cur_.next().pos;
      const LinForm rhs = lin_atom();
      if (is_constant(acc)) {
        acc = acc.c * rhs;
      } else if (is_constant(rhs)) {
        acc = rhs.c * acc;
      } else {
        throw ParseError(pos, "non-linear argument (product of n/k terms)");
      }
    }
    return acc;
  }

  // A '*' directly after a sign exponent separates factors, e.g. "(-1)^k * binom(...)".
  bool ends_argument() const {
    const auto& t = cur_.peek(1);
    return t.kind == TokenKind::ident && (t.text == "binom" || t.text == "catalan" || t.text == "factorial");
  }

  LinForm lin_atom() {
    const auto& t = cur_.peek();
    if (t.kind == TokenKind::number) {
      return LinForm{0, 0, std::stoll(cur_.next().text)};
    }
    if (t.kind == TokenKind::ident) {
      if (t.text == "n") {
        cur_.next();
        return LinForm{1, 0, 0};
      }
      if (t.text == "k") {
        cur_.next();
        return LinForm{0, 1, 0};
      }
      throw ParseError(t.pos, "unknown variable '" + t.text + "' (expected n or k)");
    }
    if (cur_.accept('(')) {
      LinForm l = lin();
      cur_.expect(')');
      return l;
    }
    cur_.fail("expected n, k, an integer or '('");
  }

  TokenCursor cur_;
  LinForm sign_;
  Rational constant_ = 1;
  std::vector<Factor> factors_;
};

}  // namespace

HyperTerm parse_summand(std::string_view text) { return SummandParser(text).parse(); }

}  // namespace telescope
