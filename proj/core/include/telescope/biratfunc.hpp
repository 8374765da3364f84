#pragma once

#include <string>

#include "telescope/bipoly.hpp"
#include "telescope/ratfunc.hpp"

namespace telescope {

// Reduced rational function in (n, k). Canonical: gcd(num, den) = 1,
// num and den have integer coefficients with joint content 1, and den has
// a positive graded-lex leading coefficient. Equality is structural.
class BiRatFunc {
 public:
  BiRatFunc() : den_(Rational(1)) {}
  BiRatFunc(const Rational& c) : num_(c), den_(Rational(1)) { normalize(); }  // NOLINT
  BiRatFunc(BiPoly num) : num_(std::move(num)), den_(Rational(1)) { normalize(); }  // NOLINT
  BiRatFunc(BiPoly num, BiPoly den);  // throws std::domain_error if den == 0
  static BiRatFunc from_ratfunc(const RatFunc& r);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  // Throws std::domain_error when the denominator vanishes at the point.
  Rational eval(const Rational& n0, const Rational& k0) const;
  BiRatFunc shift_k(const Rational& h) const;
  BiRatFunc shift_n(const Rational& h) const;
  BiRatFunc inverse() const;
  BiRatFunc pow(int e) const;

  BiRatFunc& operator+=(const BiRatFunc& rhs);
  BiRatFunc& operator-=(const BiRatFunc& rhs);
  BiRatFunc& operator*=(const BiRatFunc& rhs);
  BiRatFunc& operator/=(const BiRatFunc& rhs);
  friend BiRatFunc operator+(BiRatFunc a, const BiRatFunc& b) { return a += b; }
  friend BiRatFunc operator-(BiRatFunc a, const BiRatFunc& b) { return a -= b; }
  friend BiRatFunc operator*(BiRatFunc a, const BiRatFunc& b) { return a *= b; }
  friend BiRatFunc operator/(BiRatFunc a, const BiRatFunc& b) { return a /= b; }
  BiRatFunc operator-() const;

  friend bool operator==(const BiRatFunc& a, const BiRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  void normalize_scale();  // content and sign only; num and den already coprime
  static BiRatFunc from_coprime(BiPoly num, BiPoly den);

  BiPoly num_;
  BiPoly den_;
};

// ratfunc_normalize: reduce num/den to canonical form.
BiRatFunc ratfunc_normalize(const BiPoly& num, const BiPoly& den);

}  // namespace telescope
