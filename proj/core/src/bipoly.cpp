#include "telescope/bipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>

namespace telescope {

BiPoly::BiPoly(const Rational& c) {
  if (!c.is_zero()) {
    coeffs_.emplace_back(c, Var::n);
  }
}

BiPoly::BiPoly(const Poly& n_poly) {
  if (!n_poly.is_zero()) {
    coeffs_.push_back(n_poly.with_var(Var::n));
  }
}

BiPoly::BiPoly(std::vector<Poly> k_coeffs) : coeffs_(std::move(k_coeffs)) {
  for (auto& c : coeffs_) {
    c = c.with_var(Var::n);
  }
  trim();
}

BiPoly BiPoly::k() { return BiPoly(std::vector<Poly>{Poly(Var::n), Poly(Rational(1))}); }

BiPoly BiPoly::n() { return BiPoly(Poly::linear(1, 0, Var::n)); }

BiPoly BiPoly::linear(const Rational& a, const Rational& b, const Rational& c) {
  return BiPoly(std::vector<Poly>{Poly::linear(a, c, Var::n), Poly(b)});
}

BiPoly BiPoly::from_k_poly(const Poly& p) {
  std::vector<Poly> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    v.emplace_back(c, Var::n);
  }
  return BiPoly(std::move(v));
}

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

int BiPoly::degree_n() const {
  int d = -1;
  for (const auto& c : coeffs_) {
    d = std::max(d, c.degree());
  }
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) {
      d = std::max(d, static_cast<int>(i) + coeffs_[i].degree());
    }
  }
  return d;
}

Poly BiPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
    return Poly(Var::n);
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly BiPoly::leading() const { return coeffs_.empty() ? Poly(Var::n) : coeffs_.back(); }

Rational BiPoly::coeff(int k_deg, int n_deg) const { return coeff(k_deg).coeff(n_deg); }

Rational BiPoly::graded_leading() const {
  const int total = total_degree();
  if (total < 0) {
    return Rational();
  }
  for (int kd = std::min(total, degree_k()); kd >= 0; --kd) {
    const Rational c = coeff(kd, total - kd);
    if (!c.is_zero()) {
      return c;
    }
  }
  return Rational();
}

Rational BiPoly::eval(const Rational& n0, const Rational& k0) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * k0 + it->eval(n0);
  }
  return acc;
}

Poly BiPoly::eval_n(const Rational& n0) const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    v.push_back(c.eval(n0));
  }
  return Poly(std::move(v), Var::k);
}

BiPoly BiPoly::shift_k(const Rational& h) const {
  if (h.is_zero() || degree_k() < 1) {
    return *this;
  }
  const BiPoly kh = BiPoly::linear(0, 1, h);
  BiPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * kh + BiPoly(*it);
  }
  return acc;
}

BiPoly BiPoly::shift_n(const Rational& h) const {
  BiPoly r = *this;
  for (auto& c : r.coeffs_) {
    c = c.shift(h);
  }
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result(Rational(1));
  BiPoly base = *this;
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

Poly BiPoly::content_n() const {
  Poly g(Var::n);
  for (const auto& c : coeffs_) {
    g = telescope::gcd(g, c);
    if (g.degree() == 0) {
      break;
    }
  }
  return g;
}

Rational BiPoly::rational_content() const {
  if (is_zero()) {
    return Rational();
  }
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& p : coeffs_) {
    for (const auto& c : p.coeffs()) {
      if (c.is_zero()) {
        continue;
      }
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    }
  }
  return Rational(num_gcd, den_lcm);
}

BiPoly BiPoly::primitive() const {
  if (is_zero()) {
    return *this;
  }
  BiPoly r = *this;
  const Poly g = content_n();
  if (g.degree() > 0) {
    r = divide_exact(r, g);
  }
  return r * r.rational_content().inverse();
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Poly(Var::n));
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), Poly(Var::n));
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return BiPoly();
  }
  std::vector<Poly> out(a.coeffs_.size() + b.coeffs_.size() - 1, Poly(Var::n));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return BiPoly(std::move(out));
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const Poly& c) {
  for (auto& x : coeffs_) {
    x *= c;
  }
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) {
    x *= c;
  }
  trim();
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.coeffs_) {
    c = -c;
  }
  return r;
}

std::string BiPoly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  // (total degree, k degree, coefficient), graded-lex descending.
  std::vector<std::tuple<int, int, Rational>> terms;
  for (int kd = 0; kd <= degree_k(); ++kd) {
    const Poly& c = coeffs_[static_cast<std::size_t>(kd)];
    for (int nd = 0; nd <= c.degree(); ++nd) {
      if (!c.coeff(nd).is_zero()) {
        terms.emplace_back(kd + nd, kd, c.coeff(nd));
      }
    }
  }
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return std::tie(std::get<0>(x), std::get<1>(x)) > std::tie(std::get<0>(y), std::get<1>(y));
  });
  std::string out;
  for (const auto& [total, kd, c] : terms) {
    const int nd = total - kd;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational a = c.abs();
    std::string mono;
    if (kd > 0) {
      mono += kd > 1 ? "k^" + std::to_string(kd) : "k";
    }
    if (nd > 0) {
      if (!mono.empty()) {
        mono += "*";
      }
      mono += nd > 1 ? "n^" + std::to_string(nd) : "n";
    }
    if (mono.empty()) {
      out += a.to_string();
    } else if (a.is_one()) {
      out += mono;
    } else {
      out += a.to_string() + "*" + mono;
    }
  }
  return out;
}

BiPoly divide_exact(const BiPoly& a, const Poly& c) {
  std::vector<Poly> v;
  v.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) {
    v.push_back(x / c);
  }
  return BiPoly(std::move(v));
}

BiPoly divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) {
    throw std::domain_error("bivariate division by zero");
  }
  if (b.is_n_only()) {
    return divide_exact(a, b.leading());
  }
  BiPoly rem = a;
  std::vector<Poly> quot(
      static_cast<std::size_t>(std::max(0, a.degree_k() - b.degree_k() + 1)), Poly(Var::n));
  const Poly lead = b.leading();
  while (!rem.is_zero() && rem.degree_k() >= b.degree_k()) {
    const int shift = rem.degree_k() - b.degree_k();
    const Poly q = rem.leading() / lead;
    quot[static_cast<std::size_t>(shift)] = q;
    std::vector<Poly> mono(static_cast<std::size_t>(shift) + 1, Poly(Var::n));
    mono.back() = q;
    rem -= BiPoly(std::move(mono)) * b;
  }
  if (!rem.is_zero()) {
    throw std::domain_error("inexact bivariate division");
  }
  return BiPoly(std::move(quot));
}

BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) {
    throw std::domain_error("pseudo-remainder by zero");
  }
  BiPoly r = a;
  const Poly lead = b.leading();
  while (!r.is_zero() && r.degree_k() >= b.degree_k()) {
    const int shift = r.degree_k() - b.degree_k();
    std::vector<Poly> mono(static_cast<std::size_t>(shift) + 1, Poly(Var::n));
    mono.back() = r.leading();
    r = r * lead - BiPoly(std::move(mono)) * b;
  }
  return r;
}

namespace {

BiPoly normalize_sign(BiPoly p) {
  if (!p.is_zero()) {
    p = p * p.rational_content().inverse();
    if (p.graded_leading().sign() < 0) {
      p = -p;
    }
  }
  return p;
}

// True when specializing n to a point where both leading coefficients
// survive yields coprime images, which bounds the k-degree of the gcd by 0.
bool coprime_by_specialization(const BiPoly& a, const BiPoly& b) {
  for (std::int64_t n0 = 0; n0 < 8; ++n0) {
    const Rational x = n0 % 2 ? Rational(-(n0 + 1) / 2) : Rational(n0 / 2 + 1);
    if (a.leading().eval(x).is_zero() || b.leading().eval(x).is_zero()) {
      continue;
    }
    return gcd(a.eval_n(x), b.eval_n(x)).degree() == 0;
  }
  return false;
}

// Primitive PRS gcd of two nonzero primitive polynomials.
BiPoly primitive_gcd(BiPoly a, BiPoly b) {
  if (a.degree_k() < b.degree_k()) {
    std::swap(a, b);
  }
  if (b.degree_k() == 0 || coprime_by_specialization(a, b)) {
    return BiPoly(Rational(1));
  }
  while (!b.is_zero()) {
    if (b.degree_k() == 0) {
      return BiPoly(Rational(1));
    }
    BiPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) {
    return normalize_sign(b);
  }
  if (b.is_zero()) {
    return normalize_sign(a);
  }
  const Poly content = telescope::gcd(a.content_n(), b.content_n());
  const BiPoly g = primitive_gcd(a.primitive(), b.primitive());
  return normalize_sign(g * content);
}

BiPoly gcd_over_qn(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) {
    return BiPoly();
  }
  if (a.is_zero()) {
    return normalize_sign(b.primitive());
  }
  if (b.is_zero()) {
    return normalize_sign(a.primitive());
  }
  return normalize_sign(primitive_gcd(a.primitive(), b.primitive()));
}

}  // namespace telescope
