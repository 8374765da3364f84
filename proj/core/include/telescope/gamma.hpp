#pragma once

#include <cstdint>
#include <string>

#include "telescope/rational.hpp"

namespace telescope {

// twice_value / 2.
struct HalfInt {
  std::int64_t twice_value = 0;

  static HalfInt from_int(std::int64_t v) { return HalfInt{2 * v}; }
  // Throws std::invalid_argument unless r has denominator 1 or 2.
  static HalfInt from_rational(const Rational& r);
  static HalfInt parse(const std::string& text);

  Rational value() const { return Rational(twice_value) / 2; }
  bool is_integer() const { return twice_value % 2 == 0; }
  bool is_nonpositive_integer() const { return is_integer() && twice_value <= 0; }
  std::string to_string() const { return value().to_string(); }

  friend HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice_value + b.twice_value}; }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice_value - b.twice_value}; }
  friend bool operator==(HalfInt, HalfInt) = default;
};

// coeff * pi^(pi_half_power / 2). A zero coeff is the exact value 0.
struct GammaProduct {
  Rational coeff = 1;
  std::int64_t pi_half_power = 0;

  bool is_zero() const { return coeff.is_zero(); }
  bool is_rational() const { return is_zero() || pi_half_power == 0; }
  // Throws EvalError when a net power of pi remains.
  Rational rational() const;
  std::string to_string() const;

  friend GammaProduct operator*(const GammaProduct& a, const GammaProduct& b) {
    return {a.coeff * b.coeff, a.pi_half_power + b.pi_half_power};
  }
  friend GammaProduct operator/(const GammaProduct& a, const GammaProduct& b) {
    return {a.coeff / b.coeff, a.pi_half_power - b.pi_half_power};
  }
  friend bool operator==(const GammaProduct&, const GammaProduct&) = default;
};

// Gamma at a half-integer: Finite(coeff != 0, pi_half_power in {0, 1}) or Pole.
struct GammaValue {
  bool pole = false;
  GammaProduct finite;

  static GammaValue make_pole() { return GammaValue{true, {}}; }
  std::string to_string() const;
  friend bool operator==(const GammaValue&, const GammaValue&) = default;
};

GammaValue gamma_half(HalfInt x);

// Rising factorial (x)_j = x (x+1) ... (x+j-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, std::int64_t j);

}  // namespace telescope
