#pragma once

#include <cstdint>
#include <vector>

#include "telescope/gamma.hpp"
#include "telescope/rational.hpp"

namespace telescope {

// pFq(upper; lower; 1) with half-integer parameters.
struct PFQSpec {
  std::vector<HalfInt> upper;
  std::vector<HalfInt> lower;
};

// Number of the last nonzero term: min(-u) over non-positive integer
// upper parameters u. Throws EvalError if the series does not terminate.
std::int64_t termination_index(const PFQSpec& spec);

// Exact sum_j prod (upper)_j / (prod (lower)_j j!). Throws EvalError if the
// series does not terminate or a lower Pochhammer symbol vanishes first.
Rational pfq_terminating(const PFQSpec& spec);

// 3F2(a, b, c; (1+a+b)/2, 2c; 1) by Watson's eight-Gamma product. A pole
// among the denominator Gammas gives exact 0; a numerator pole throws
// EvalError. Requires a or b to be a non-positive integer.
GammaProduct watson_w00(HalfInt a, HalfInt b, HalfInt c);

// The matching terminating series, W00 as a PFQSpec.
PFQSpec w00_spec(HalfInt a, HalfInt b, HalfInt c);
// 3F2(a, b, c; (1+a+b)/2, 2c+1; 1).
PFQSpec w01_spec(HalfInt a, HalfInt b, HalfInt c);

// W01(a,b,c) = W00(a,b,c) - ab/((1+a+b)(2c+1)) W00(a+1,b+1,c+1), each W00
// by Watson's formula. Throws EvalError if (1+a+b)(2c+1) = 0.
Rational chu_w01(HalfInt a, HalfInt b, HalfInt c);

// Gamma^2((n+1)/2) 4^n / (pi Gamma^2(n/2+1)) for even n >= 0.
GammaProduct closed_form_F_exact(std::int64_t n);
// -Gamma^2(n/2+1) 4^n / (pi Gamma^2((n+3)/2)) for odd n >= 1.
GammaProduct closed_form_G_exact(std::int64_t n);
// Rational value; throws EvalError on a parity violation.
Rational closed_form_F(std::int64_t n);
Rational closed_form_G(std::int64_t n);

// (2n+1)! (2n)!^3 / ((4n)! n!^3 (n+1)!).
Rational second_identity_3f2(std::int64_t n);

}  // namespace telescope
