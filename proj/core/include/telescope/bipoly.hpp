#pragma once

#include <string>
#include <vector>

#include "telescope/poly.hpp"

namespace telescope {

// Polynomial in k whose coefficients are polynomials in n, i.e. Q[n][k].
// coeffs()[i] multiplies k^i; the highest stored coefficient is nonzero.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(const Rational& c);  // NOLINT
  BiPoly(const Poly& n_poly);  // NOLINT: constant in k
  explicit BiPoly(std::vector<Poly> k_coeffs);

  static BiPoly k();
  static BiPoly n();
  // a*n + b*k + c
  static BiPoly linear(const Rational& a, const Rational& b, const Rational& c);
  // Lifts a univariate polynomial in k.
  static BiPoly from_k_poly(const Poly& p);

  const std::vector<Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree_k() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree_n() const;
  int total_degree() const;
  Poly coeff(int i) const;
  Poly leading() const;
  // True iff the polynomial does not involve k.
  bool is_n_only() const { return coeffs_.size() <= 1; }

  // Coefficient of k^a n^b.
  Rational coeff(int k_deg, int n_deg) const;
  // Coefficient of the leading monomial under graded-lex order (k before n).
  Rational graded_leading() const;

  Rational eval(const Rational& n0, const Rational& k0) const;
  Poly eval_n(const Rational& n0) const;  // polynomial in k
  BiPoly shift_k(const Rational& h) const;
  BiPoly shift_n(const Rational& h) const;
  BiPoly pow(unsigned e) const;

  // gcd over Q[n] of all k-coefficients (monic), times nothing rational.
  Poly content_n() const;
  // Strips the Q[n] content and the rational content; sign unchanged.
  BiPoly primitive() const;
  // Positive rational c with this/c integral and integer-content 1.
  Rational rational_content() const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);
  BiPoly& operator*=(const Poly& c);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Poly& c) { return a *= c; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  BiPoly operator-() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Integer-coefficient form required; terms ordered by total degree
  // descending, then k-degree descending: "2*k^2*n - 3*k + 1".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Poly> coeffs_;
};

// Exact division in Q[n][k]; throws std::domain_error if b does not divide a.
BiPoly divide_exact(const BiPoly& a, const BiPoly& b);
// Divides every k-coefficient by the n-polynomial c exactly.
BiPoly divide_exact(const BiPoly& a, const Poly& c);
BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b);

// gcd in Q[n][k], normalised to integer content 1 and positive graded-lex
// leading coefficient. gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
// gcd over Q(n)[k]: the k-free part is discarded.
BiPoly gcd_over_qn(const BiPoly& a, const BiPoly& b);

}  // namespace telescope
