#include "telescope/poly_parse.hpp"

#include "lexer.hpp"

namespace telescope {
namespace {

using detail::TokenCursor;
using detail::TokenKind;

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : cur_(text) {}

  BiPoly parse() {
    if (cur_.at_end()) {
      cur_.fail("expected a polynomial");
    }
    BiPoly p = sum();
    if (!cur_.at_end()) {
      cur_.fail("unexpected token");
    }
    return p;
  }

 private:
  BiPoly sum() {
    BiPoly acc = cur_.accept('-') ? -product() : (cur_.accept('+'), product());
    while (true) {
      if (cur_.accept('+')) {
        acc += product();
      } else if (cur_.accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() const {
    const auto& t = cur_.peek();
    return t.kind == TokenKind::number || t.kind == TokenKind::ident || cur_.is_punct('(');
  }

  BiPoly product() {
    BiPoly acc = power();
    while (true) {
      if (cur_.accept('*')) {
        acc *= power();
      } else if (cur_.is_punct('/')) {
        const std::size_t pos = cur_.next().pos;
        const BiPoly d = power();
        if (!d.is_n_only() || d.degree_n() > 0 || d.is_zero()) {
          throw ParseError(pos, "can only divide by a nonzero constant");
        }
        acc *= d.leading().constant_term().inverse();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  BiPoly power() {
    BiPoly base = atom();
    if (cur_.accept('^')) {
      const auto& t = cur_.peek();
      if (t.kind != TokenKind::number) {
        cur_.fail("expected a non-negative integer exponent");
      }
      const unsigned e = static_cast<unsigned>(std::stoul(cur_.next().text));
      return base.pow(e);
    }
    return base;
  }

  BiPoly atom() {
    const auto& t = cur_.peek();
    if (t.kind == TokenKind::number) {
      Integer num(cur_.next().text);
      if (cur_.is_punct('/') && cur_.peek(1).kind == TokenKind::number) {
        cur_.next();
        const auto& d = cur_.next();
        const Integer den(d.text);
        if (den == 0) {
          throw ParseError(d.pos, "zero denominator");
        }
        return BiPoly(Rational(num, den));
      }
      return BiPoly(Rational(num));
    }
    if (t.kind == TokenKind::ident) {
      if (t.text == "n") {
        cur_.next();
        return BiPoly::n();
      }
      if (t.text == "k") {
        cur_.next();
        return BiPoly::k();
      }
      throw ParseError(t.pos, "unknown variable '" + t.text + "' (expected n or k)");
    }
    if (cur_.accept('(')) {
      BiPoly p = sum();
      cur_.expect(')');
      return p;
    }
    cur_.fail("expected a number, variable or '('");
  }

  TokenCursor cur_;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text) { return PolyParser(text).parse(); }

Poly parse_poly_n(std::string_view text) {
  const BiPoly p = parse_bipoly(text);
  if (!p.is_n_only()) {
    const auto k_pos = text.find('k');
    throw ParseError(k_pos == std::string_view::npos ? 0 : k_pos,
                     "polynomial in n must not involve k");
  }
  return p.leading();
}

}  // namespace telescope
