#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "telescope/rational.hpp"

namespace telescope {

// Right-hand-side expressions in n:
//
//   expr    := term (('+' | '-') term)*
//   term    := item (('*' | '/') item | guard)*
//   item    := guard | '-' item | power
//   power   := primary ['^' ['-'] primary]   (exponent must evaluate to an integer)
//   primary := integer | 'n' | '(' expr ')'
//            | ('binom' | 'catalan' | 'factorial' | 'floor') '(' expr [',' expr] ')'
//   guard   := '[' 'n' ('even' | 'odd') ']'
//
// A false parity guard makes its whole term 0 without evaluating the rest,
// so "binom(n, n/2) [n even]" is defined at odd n.
class ClosedForm {
 public:
  struct Node;

  // Throws ParseError.
  static ClosedForm parse(std::string_view text);

  // Throws EvalError for non-integer combinatorial arguments, negative
  // factorials and division by zero.
  Rational eval(std::int64_t n) const;
  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

Rational eval_closed_form(std::string_view expr, std::int64_t n);

}  // namespace telescope
