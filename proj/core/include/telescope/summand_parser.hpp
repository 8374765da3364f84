#pragma once

#include <string_view>

#include "telescope/hyperterm.hpp"

namespace telescope {

// Summand grammar (version 1):
//
//   summand  := ['-'] factor ('*' factor)*
//   factor   := '(' '-' '1' ')' '^' signexp
//             | ('binom' '(' lin ',' lin ')' | 'catalan' '(' lin ')'
//                | 'factorial' '(' lin ')') [power]
//             | ['-'] integer ['/' integer] [power]
//   power    := '^' ( ['-'] integer | '(' ['-'] integer ')' )
//   signexp  := integer | 'n' | 'k' | '(' lin ')'
//   lin      := integer-linear expression in n and k (+, -, *, parentheses)
//
// Throws ParseError with the offending column on syntax errors, non-linear
// arguments and zero exponents.
HyperTerm parse_summand(std::string_view text);

}  // namespace telescope
