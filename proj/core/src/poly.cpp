#include "telescope/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace telescope {

Poly::Poly(std::vector<Rational> coeffs, Var var) : coeffs_(std::move(coeffs)), var_(var) { trim(); }

Poly::Poly(const Rational& constant, Var var) : var_(var) {
  if (!constant.is_zero()) {
    coeffs_.push_back(constant);
  }
}

Poly Poly::monomial(const Rational& c, int degree, Var var) {
  if (c.is_zero()) {
    return Poly(var);
  }
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v), var);
}

Poly Poly::linear(const Rational& a, const Rational& b, Var var) { return Poly({b, a}, var); }

Poly Poly::with_var(Var v) const {
  Poly p = *this;
  p.var_ = v;
  return p;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
    return Rational();
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly Poly::shift(const Rational& h) const {
  if (h.is_zero() || is_constant()) {
    return *this;
  }
  // Horner in the shifted variable: acc = acc*(x+h) + c.
  const Poly xh = Poly::linear(1, h, var_);
  Poly acc(var_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * xh + Poly(*it, var_);
  }
  return acc;
}

Poly Poly::scale_var(const Rational& s) const {
  Poly p = *this;
  Rational f = 1;
  for (auto& c : p.coeffs_) {
    c *= f;
    f *= s;
  }
  p.trim();
  return p;
}

Poly Poly::monic() const {
  if (is_zero()) {
    return *this;
  }
  return *this * leading().inverse();
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1), var_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) {
      result *= base;
    }
    e >>= 1u;
    if (e > 0) {
      base *= base;
    }
  }
  return result;
}

Rational Poly::content() const {
  if (is_zero()) {
    return Rational();
  }
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c.is_zero()) {
      continue;
    }
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

Poly Poly::primitive() const {
  if (is_zero()) {
    return *this;
  }
  return *this * content().inverse();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

void Poly::check_var(const Poly& other) const {
  if (!is_constant() && !other.is_constant() && var_ != other.var_) {
    throw std::invalid_argument("polynomials in different variables");
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_var(rhs);
  if (is_constant() && !rhs.is_constant()) {
    var_ = rhs.var_;
  }
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_var(rhs);
  if (is_constant() && !rhs.is_constant()) {
    var_ = rhs.var_;
  }
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_var(b);
  const Var v = a.is_constant() ? b.var_ : a.var_;
  if (a.is_zero() || b.is_zero()) {
    return Poly(v);
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out), v);
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) {
    x *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) {
    c = -c;
  }
  return p;
}

std::string Poly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  const char v = static_cast<char>(var_);
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) {
      continue;
    }
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational a = c.abs();
    if (i == 0) {
      out += a.to_string();
      continue;
    }
    if (!a.is_one()) {
      out += a.to_string() + "*";
    }
    out += v;
    if (i > 1) {
      out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  const Var v = a.is_constant() ? b.var() : a.var();
  if (a.degree() < b.degree()) {
    return {Poly(v), a};
  }
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational lead_inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational q = rem[static_cast<std::size_t>(i + b.degree())] * lead_inv;
    quot[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < bc.size(); ++j) {
      rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
    }
  }
  return {Poly(std::move(quot), v), Poly(std::move(rem), v)};
}

Poly operator/(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw std::domain_error("inexact polynomial division");
  }
  return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    // Keep intermediate coefficients small.
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    return Poly(a.is_constant() ? b.var() : a.var());
  }
  return ((a * b) / gcd(a, b)).monic();
}

Rational resultant(const Poly& a_in, const Poly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) {
    return Rational();
  }
  Poly a = a_in;
  Poly b = b_in;
  if (b.degree() == 0) {
    return b.leading().pow(a.degree());
  }
  if (a.degree() == 0) {
    return a.leading().pow(b.degree());
  }
  Rational result = 1;
  while (true) {
    const int m = a.degree();
    const int n = b.degree();
    Poly r = a % b;
    if (r.is_zero()) {
      return Rational();
    }
    const int p = r.degree();
    if ((m * n) % 2 == 1) {
      result = -result;
    }
    result *= b.leading().pow(m - p);
    a = std::move(b);
    b = std::move(r);
    if (b.degree() == 0) {
      return result * b.leading().pow(a.degree());
    }
  }
}

Rational cauchy_root_bound(const Poly& p) {
  if (p.degree() < 1) {
    return Rational();
  }
  Rational best;
  const Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) {
    best = std::max(best, p.coeff(i).abs() / lead);
  }
  return best + 1;
}

}  // namespace telescope
