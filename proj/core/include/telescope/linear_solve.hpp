#pragma once

#include <optional>
#include <vector>

#include "telescope/ratfunc.hpp"

namespace telescope {

using RatFuncMatrix = std::vector<std::vector<RatFunc>>;
using RatFuncVector = std::vector<RatFunc>;

// Solves A*x = rhs over Q(n) by Gauss-Jordan elimination. Returns one
// solution with every free variable set to 0, or nullopt if inconsistent.
// Throws std::invalid_argument on ragged or mismatched dimensions.
std::optional<RatFuncVector> solve_linear(const RatFuncMatrix& a, const RatFuncVector& rhs);

}  // namespace telescope
