#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "telescope/biratfunc.hpp"
#include "telescope/poly.hpp"
#include "telescope/rational.hpp"

namespace telescope {

// a*n + b*k + c with integer coefficients.
struct LinForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t eval(std::int64_t n, std::int64_t k) const { return a * n + b * k + c; }
  BiPoly to_bipoly() const { return BiPoly::linear(a, b, c); }
  std::string to_string() const;

  friend LinForm operator+(const LinForm& x, const LinForm& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c};
  }
  friend LinForm operator-(const LinForm& x, const LinForm& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c};
  }
  friend LinForm operator*(std::int64_t s, const LinForm& x) { return {s * x.a, s * x.b, s * x.c}; }
  friend auto operator<=>(const LinForm&, const LinForm&) = default;
};

enum class FactorKind { binomial, catalan, factorial };

struct Factor {
  FactorKind kind = FactorKind::factorial;
  LinForm arg;     // top argument for binomials
  LinForm bottom;  // binomials only; zero otherwise
  int exponent = 1;

  friend auto operator<=>(const Factor&, const Factor&) = default;
};

// Proper hypergeometric summand f(n,k) = (-1)^sign * constant * prod factor^exp.
// Canonical: sign coefficients reduced mod 2, factors sorted with equal
// bases merged and zero exponents dropped.
class HyperTerm {
 public:
  HyperTerm() = default;
  HyperTerm(LinForm sign, Rational constant, std::vector<Factor> factors);

  const LinForm& sign() const { return sign_; }
  const Rational& constant() const { return constant_; }
  const std::vector<Factor>& factors() const { return factors_; }

  // Product of factorials of linear forms with integer exponents; binomials
  // and Catalan numbers are expanded.
  std::vector<std::pair<LinForm, int>> factorial_decomposition() const;

  // Parseable canonical text, e.g. "(-1)^k * binom(n, k) * catalan(k)".
  std::string to_string() const;

  friend bool operator==(const HyperTerm&, const HyperTerm&) = default;

 private:
  LinForm sign_;
  Rational constant_ = 1;
  std::vector<Factor> factors_;
};

// Summation bounds k_min(n)..k_max(n), each a*n + c with a in {0, 1/2, 1, 2}.
struct Support {
  Poly lower;
  Poly upper;

  // Throws std::invalid_argument for a slope outside the allowed set.
  static Support make(Poly lower, Poly upper);
  static Support parse(std::string_view lower, std::string_view upper);

  // Throws EvalError when a bound is not an integer at n.
  std::pair<std::int64_t, std::int64_t> bounds(std::int64_t n) const;
  std::string to_string() const;
};

// Exact f(n,k). Binomials outside 0 <= bottom <= top (and with top < 0)
// and Catalan numbers at negative index are 0. Throws EvalError for a
// factorial of a negative argument or a zero factor with negative exponent.
Rational eval_term(const HyperTerm& t, std::int64_t n, std::int64_t k);

// f at var+1 divided by f, as a reduced rational function in (n, k).
BiRatFunc shift_quotient(const HyperTerm& t, Var var);

// f(n+j, k) / f(n, k) for j >= 0.
BiRatFunc n_shift_ratio(const HyperTerm& t, int j);

// sum_{k = k_min(n)}^{k_max(n)} f(n, k); 0 for an empty range.
Rational sum_exact(const HyperTerm& t, const Support& support, std::int64_t n);

}  // namespace telescope
