#pragma once

#include <optional>
#include <vector>

#include "telescope/biratfunc.hpp"
#include "telescope/linear_solve.hpp"

namespace telescope {

// Gosper normal form of a k-shift quotient over Q(n):
//
//   ratio(k) = p(k+1)/p(k) * q(k)/r(k+1),  gcd(q(k), r(k+j)) = 1 for j >= 1.
//
// p, q, r are polynomials in k with coefficients in Q[n]; pure-n factors
// are units and may sit in either q or r.
struct GosperForm {
  BiPoly p;
  BiPoly q;
  BiPoly r;
};

// Positive integers j with gcd(a(k), b(k+j)) nontrivial over Q(n)[k], ascending.
std::vector<int> integer_shift_roots(const BiPoly& a, const BiPoly& b);

// Throws std::domain_error for a zero ratio.
GosperForm gosper_normal_form(const BiRatFunc& ratio);

// Upper bound for deg_k of a polynomial solution x of
// q(k) x(k+1) - r(k) x(k) = p(k) with deg_k p = p_degree; -1 if none exists.
int gosper_degree_bound(const BiPoly& q, const BiPoly& r, int p_degree);

// Polynomial x(k) = sum x_i k^i with coefficients in Q(n).
using QnPoly = std::vector<RatFunc>;

// g(n,k) = R(n,k) f(n,k) with g(n,k+1) - g(n,k) = f(n,k).
struct GosperCertificate {
  BiRatFunc R;
};

// Returns the certificate iff the term with this k-shift quotient has a
// hypergeometric antidifference.
std::optional<GosperCertificate> gosper_sum(const BiRatFunc& ratio);

// Lifts a Q(n)-coefficient polynomial in k to num/den over Q[n][k].
BiRatFunc qn_poly_to_ratfunc(const QnPoly& x);

}  // namespace telescope
