#include "telescope/gosper.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "gosper_internal.hpp"

namespace telescope {

std::vector<int> integer_shift_roots(const BiPoly& a, const BiPoly& b) {
  std::vector<int> roots;
  if (a.degree_k() < 1 || b.degree_k() < 1) {
    return roots;
  }
  // Specialise n where neither k-leading coefficient vanishes, so the
  // specialised resultant is the specialisation of Res_k(a(k), b(k+j)).
  // Every true root survives; spurious ones are filtered exactly below.
  static constexpr std::array<int, 12> kSamplePoints = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  Poly a_spec(Var::k);
  Poly b_spec(Var::k);
  bool found = false;
  for (int n0 : kSamplePoints) {
    if (a.leading().eval(n0).is_zero() || b.leading().eval(n0).is_zero()) {
      continue;
    }
    a_spec = a.eval_n(n0);
    b_spec = b.eval_n(n0);
    found = true;
    break;
  }
  if (!found) {
    throw std::logic_error("integer_shift_roots: no admissible specialisation point");
  }
  const Rational bound = cauchy_root_bound(a_spec) + cauchy_root_bound(b_spec);
  const std::int64_t j_max = Rational(bound.floor()).to_int64();
  for (std::int64_t j = 1; j <= j_max; ++j) {
    if (!resultant(a_spec, b_spec.shift(j)).is_zero()) {
      continue;
    }
    if (gcd_over_qn(a, b.shift_k(j)).degree_k() > 0) {
      roots.push_back(static_cast<int>(j));
    }
  }
  return roots;
}

GosperForm gosper_normal_form(const BiRatFunc& ratio) {
  if (ratio.is_zero()) {
    throw std::domain_error("gosper_normal_form: zero ratio");
  }
  GosperForm form{BiPoly(Rational(1)), ratio.num(), ratio.den().shift_k(-1)};
  for (int j : integer_shift_roots(form.q, form.r)) {
    while (true) {
      const BiPoly g = gcd_over_qn(form.q, form.r.shift_k(j));
      if (g.degree_k() < 1) {
        break;
      }
      form.q = divide_exact(form.q, g);
      form.r = divide_exact(form.r, g.shift_k(-j));
      for (int i = 1; i < j; ++i) {
        form.p *= g.shift_k(-i);
      }
    }
  }
  return form;
}

int gosper_degree_bound(const BiPoly& q, const BiPoly& r, int p_degree) {
  const BiPoly minus = q - r;
  const BiPoly plus = q + r;
  const int deg_minus = minus.degree_k();
  const int deg_plus = plus.degree_k();
  if (deg_minus >= deg_plus) {
    return p_degree - deg_minus;
  }
  int bound = p_degree - deg_plus + 1;
  // Leading terms cancel when deg x = -2A/B is a non-negative integer.
  const RatFunc lead_a(minus.coeff(deg_plus - 1));
  const RatFunc lead_b(plus.leading());
  const RatFunc cancel = RatFunc(Rational(-2)) * lead_a / lead_b;
  if (cancel.is_constant()) {
    const Rational c = cancel.constant_value();
    if (c.is_integer() && c.sign() >= 0) {
      bound = std::max(bound, static_cast<int>(c.to_int64()));
    }
  }
  return bound;
}

namespace detail {

BiPoly gosper_column(const BiPoly& q, const BiPoly& r, int i) {
  const BiPoly k = BiPoly::k();
  return q * BiPoly::linear(0, 1, 1).pow(static_cast<unsigned>(i)) - r * k.pow(static_cast<unsigned>(i));
}

}  // namespace detail

BiRatFunc qn_poly_to_ratfunc(const QnPoly& x) {
  Poly common(Rational(1));
  for (const auto& c : x) {
    common = lcm(common, c.den());
  }
  std::vector<Poly> coeffs;
  coeffs.reserve(x.size());
  for (const auto& c : x) {
    coeffs.push_back(c.num() * (common / c.den()));
  }
  return BiRatFunc(BiPoly(std::move(coeffs)), BiPoly(common));
}

std::optional<GosperCertificate> gosper_sum(const BiRatFunc& ratio) {
  const GosperForm form = gosper_normal_form(ratio);
  const int degree = gosper_degree_bound(form.q, form.r, form.p.degree_k());
  if (degree < 0) {
    return std::nullopt;
  }
  std::vector<BiPoly> columns;
  int rows = form.p.degree_k() + 1;
  for (int i = 0; i <= degree; ++i) {
    columns.push_back(detail::gosper_column(form.q, form.r, i));
    rows = std::max(rows, columns.back().degree_k() + 1);
  }
  RatFuncMatrix a(static_cast<std::size_t>(rows), RatFuncVector(columns.size()));
  RatFuncVector rhs(static_cast<std::size_t>(rows));
  for (int m = 0; m < rows; ++m) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      a[static_cast<std::size_t>(m)][i] = RatFunc(columns[i].coeff(m));
    }
    rhs[static_cast<std::size_t>(m)] = RatFunc(form.p.coeff(m));
  }
  const auto x = solve_linear(a, rhs);
  if (!x) {
    return std::nullopt;
  }
  return GosperCertificate{BiRatFunc(form.r) * qn_poly_to_ratfunc(*x) / BiRatFunc(form.p)};
}

}  // namespace telescope
