#include "telescope/gamma.hpp"

#include <stdexcept>

#include "telescope/errors.hpp"

namespace telescope {

HalfInt HalfInt::from_rational(const Rational& r) {
  const Rational twice = r * 2;
  if (!twice.is_integer()) {
    throw std::invalid_argument(r.to_string() + " is not a half-integer");
  }
  return HalfInt{twice.to_int64()};
}

HalfInt HalfInt::parse(const std::string& text) { return from_rational(Rational::parse(text)); }

Rational GammaProduct::rational() const {
  if (!is_rational()) {
    throw EvalError("value " + to_string() + " carries a net power of pi");
  }
  return coeff;
}

std::string GammaProduct::to_string() const {
  if (is_zero() || pi_half_power == 0) {
    return coeff.to_string();
  }
  return coeff.to_string() + "*pi^(" + std::to_string(pi_half_power) + "/2)";
}

std::string GammaValue::to_string() const { return pole ? "pole" : finite.to_string(); }

GammaValue gamma_half(HalfInt x) {
  if (x.is_nonpositive_integer()) {
    return GammaValue::make_pole();
  }
  if (x.is_integer()) {
    return GammaValue{false, {Rational(factorial(x.twice_value / 2 - 1)), 0}};
  }
  // Gamma(1/2) = sqrt(pi); walk with Gamma(x+1) = x Gamma(x).
  Rational coeff = 1;
  const Rational target = x.value();
  if (target > Rational(1, 2)) {
    for (Rational y(1, 2); y < target; y += 1) {
      coeff *= y;
    }
  } else {
    for (Rational y(-1, 2); y >= target; y -= 1) {
      coeff /= y;
    }
  }
  return GammaValue{false, {coeff, 1}};
}

Rational pochhammer(const Rational& x, std::int64_t j) {
  if (j < 0) {
    throw std::invalid_argument("pochhammer with negative length");
  }
  Rational acc = 1;
  for (std::int64_t i = 0; i < j; ++i) {
    acc *= x + i;
  }
  return acc;
}

}  // namespace telescope
