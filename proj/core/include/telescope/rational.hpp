#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace telescope {

using Integer = mpz_class;

// Exact rational number. Always canonical: gcd(num, den) = 1, den >= 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: implicit from integers is intended
  Rational(const Integer& value);  // NOLINT
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(const mpq_class& value);

  // Parses "p", "-p" or "p/q" (decimal). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // Only valid when is_integer() and the value fits.
  std::int64_t to_int64() const;
  Integer floor() const;

  Rational inverse() const;
  Rational abs() const;
  Rational pow(std::int64_t exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer binomial(const Integer& top, const Integer& bottom);
Integer factorial(std::int64_t m);

}  // namespace telescope
