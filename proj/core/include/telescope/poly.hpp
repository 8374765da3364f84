#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "telescope/rational.hpp"

namespace telescope {

enum class Var : char { n = 'n', k = 'k', j = 'j' };

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of
// var^i; the highest stored coefficient is nonzero (zero poly = empty).
// The variable tag is only checked when both operands are non-constant.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Var var) : var_(var) {}
  Poly(std::vector<Rational> coeffs, Var var = Var::n);
  Poly(const Rational& constant, Var var = Var::n);  // NOLINT

  static Poly monomial(const Rational& c, int degree, Var var = Var::n);
  // a*var + b
  static Poly linear(const Rational& a, const Rational& b, Var var = Var::n);

  Var var() const { return var_; }
  Poly with_var(Var v) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  Rational leading() const;
  Rational constant_term() const { return coeff(0); }

  Rational eval(const Rational& x) const;
  Poly shift(const Rational& h) const;  // p(x + h)
  Poly scale_var(const Rational& s) const;  // p(s*x)
  Poly monic() const;
  Poly pow(unsigned e) const;

  // Rational content: positive c with (*this)/c having coprime integer
  // coefficients. Zero for the zero polynomial.
  Rational content() const;
  Poly primitive() const;  // this / content()

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  void check_var(const Poly& other) const;

  std::vector<Rational> coeffs_;
  Var var_ = Var::n;
};

// Euclidean division over Q. Throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact; throws if remainder != 0
Poly operator%(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

// Res(a, b) over Q; zero iff a and b share a root (or either is zero).
Rational resultant(const Poly& a, const Poly& b);

// Upper bound on |root| for a nonzero, non-constant polynomial.
Rational cauchy_root_bound(const Poly& p);

}  // namespace telescope
