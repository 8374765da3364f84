#pragma once

#include "telescope/bipoly.hpp"

namespace telescope::detail {

// q(k) (k+1)^i - r(k) k^i: the contribution of x_i k^i to the Gosper equation.
BiPoly gosper_column(const BiPoly& q, const BiPoly& r, int i);

}  // namespace telescope::detail
