#include "telescope/ratfunc.hpp"

#include <stdexcept>

namespace telescope {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("rational function with zero denominator");
  }
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1), den_.var());
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    num_ *= lead.inverse();
    den_ *= lead.inverse();
  }
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) {
    throw std::domain_error("rational function pole at " + x.to_string());
  }
  return num_.eval(x) / d;
}

RatFunc RatFunc::shift(const Rational& h) const { return RatFunc(num_.shift(h), den_.shift(h)); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero rational function");
  }
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    normalize();
    return *this;
  }
  *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  if (is_polynomial() && rhs.is_polynomial()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees down.
  const Poly g1 = gcd(num_, rhs.den_);
  const Poly g2 = gcd(rhs.num_, den_);
  Poly n = (num_ / g1) * (rhs.num_ / g2);
  Poly d = (den_ / g2) * (rhs.den_ / g1);
  num_ = std::move(n);
  den_ = std::move(d);
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    num_ *= lead.inverse();
    den_ *= lead.inverse();
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace telescope
