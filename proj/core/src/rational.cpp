#include "telescope/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace telescope {

Rational::Rational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform.
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  const std::string s(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) {
      ++i;
    }
    if (i == part.size()) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
      }
    }
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) {
    return Rational(parse_int(s, true));
  }
  const Integer den = parse_int(s.substr(slash + 1), false);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  return Rational(parse_int(s.substr(0, slash), true), den);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) {
    throw std::domain_error("rational " + to_string() + " is not an integer");
  }
  const Integer& n = value_.get_num();
  if (!n.fits_slong_p()) {
    throw std::overflow_error("integer " + n.get_str() + " out of range");
  }
  return n.get_si();
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  return Rational(mpq_class(1) / value_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    return inverse().pow(-exponent);
  }
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Integer binomial(const Integer& top, const Integer& bottom) {
  if (top < 0 || bottom < 0 || bottom > top) {
    return 0;
  }
  if (!top.fits_ulong_p()) {
    throw std::overflow_error("binomial argument too large");
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), top.get_ui(), bottom.get_ui());
  return r;
}

Integer factorial(std::int64_t m) {
  if (m < 0) {
    throw std::domain_error("factorial of negative argument " + std::to_string(m));
  }
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

}  // namespace telescope
