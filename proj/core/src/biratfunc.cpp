#include "telescope/biratfunc.hpp"

#include <stdexcept>

namespace telescope {

BiRatFunc::BiRatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw std::domain_error("rational function with zero denominator");
  }
  normalize();
}

BiRatFunc BiRatFunc::from_ratfunc(const RatFunc& r) { return BiRatFunc(BiPoly(r.num()), BiPoly(r.den())); }

void BiRatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = BiPoly(Rational(1));
    return;
  }
  const BiPoly g = gcd(num_, den_);
  if (g.total_degree() > 0) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  normalize_scale();
}

BiRatFunc BiRatFunc::from_coprime(BiPoly num, BiPoly den) {
  BiRatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) {
    r.den_ = BiPoly(Rational(1));
    return r;
  }
  r.normalize_scale();
  return r;
}

void BiRatFunc::normalize_scale() {
  // Joint integer content, then sign.
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const BiPoly* p : {&num_, &den_}) {
    for (const auto& c : p->coeffs()) {
      for (const auto& x : c.coeffs()) {
        if (x.is_zero()) {
          continue;
        }
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.raw().get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.raw().get_den_mpz_t());
      }
    }
  }
  Rational scale(den_lcm, num_gcd);
  if (den_.graded_leading().sign() < 0) {
    scale = -scale;
  }
  if (!scale.is_one()) {
    num_ *= scale;
    den_ *= scale;
  }
}

Rational BiRatFunc::eval(const Rational& n0, const Rational& k0) const {
  const Rational d = den_.eval(n0, k0);
  if (d.is_zero()) {
    throw std::domain_error("rational function pole at (n=" + n0.to_string() +
                            ", k=" + k0.to_string() + ")");
  }
  return num_.eval(n0, k0) / d;
}

BiRatFunc BiRatFunc::shift_k(const Rational& h) const {
  BiRatFunc r;
  r.num_ = num_.shift_k(h);
  r.den_ = den_.shift_k(h);
  // Integer shifts preserve coprimality and integrality.
  if (!h.is_integer()) {
    r.normalize();
  } else if (r.den_.graded_leading().sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

BiRatFunc BiRatFunc::shift_n(const Rational& h) const {
  BiRatFunc r;
  r.num_ = num_.shift_n(h);
  r.den_ = den_.shift_n(h);
  if (!h.is_integer()) {
    r.normalize();
  } else if (r.den_.graded_leading().sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

BiRatFunc BiRatFunc::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero rational function");
  }
  BiRatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.graded_leading().sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

BiRatFunc BiRatFunc::pow(int e) const {
  if (e < 0) {
    return inverse().pow(-e);
  }
  BiRatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.normalize();
  return r;
}

BiRatFunc& BiRatFunc::operator+=(const BiRatFunc& rhs) {
  if (rhs.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = rhs;
  }
  if (den_ == rhs.den_) {
    *this = BiRatFunc(num_ + rhs.num_, den_);
    return *this;
  }
  // Only factors of gcd(den_, rhs.den_) can cancel.
  const BiPoly g = gcd(den_, rhs.den_);
  const BiPoly b = divide_exact(den_, g);
  const BiPoly d = divide_exact(rhs.den_, g);
  const BiPoly t = num_ * d + rhs.num_ * b;
  if (t.is_zero()) {
    return *this = BiRatFunc();
  }
  const BiPoly h = gcd(t, g);
  *this = from_coprime(divide_exact(t, h), b * d * divide_exact(g, h));
  return *this;
}

BiRatFunc& BiRatFunc::operator-=(const BiRatFunc& rhs) { return *this += -rhs; }

BiRatFunc& BiRatFunc::operator*=(const BiRatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) {
    return *this = BiRatFunc();
  }
  // Both sides reduced: only cross gcds can cancel.
  const BiPoly g1 = gcd(num_, rhs.den_);
  const BiPoly g2 = gcd(rhs.num_, den_);
  BiPoly n = divide_exact(num_, g1) * divide_exact(rhs.num_, g2);
  BiPoly d = divide_exact(den_, g2) * divide_exact(rhs.den_, g1);
  *this = from_coprime(std::move(n), std::move(d));
  return *this;
}

BiRatFunc& BiRatFunc::operator/=(const BiRatFunc& rhs) { return *this *= rhs.inverse(); }

BiRatFunc BiRatFunc::operator-() const {
  BiRatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string BiRatFunc::to_string() const {
  if (den_ == BiPoly(Rational(1))) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

BiRatFunc ratfunc_normalize(const BiPoly& num, const BiPoly& den) { return BiRatFunc(num, den); }

}  // namespace telescope
