#pragma once

#include <string_view>

#include "telescope/bipoly.hpp"
#include "telescope/poly.hpp"

namespace telescope {

// Human-readable polynomial text in n and k: integers, p/q literals, +, -,
// *, ^ (non-negative integer), parentheses, and implicit multiplication
// ("2n", "(n-1)(n+2)^2"). Throws ParseError.
BiPoly parse_bipoly(std::string_view text);

// As parse_bipoly, rejecting any occurrence of k.
Poly parse_poly_n(std::string_view text);

}  // namespace telescope
