#pragma once

#include <string>

#include "telescope/poly.hpp"

namespace telescope {

// Element of Q(n): reduced num/den with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Only meaningful when is_constant().
  Rational constant_value() const { return num_.constant_term() / den_.constant_term(); }

  Rational eval(const Rational& x) const;  // throws if den vanishes
  RatFunc shift(const Rational& h) const;
  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace telescope
