#include "telescope/zeilberger.hpp"

#include <cstdio>

#include "gosper_internal.hpp"
#include "telescope/gosper.hpp"
#include "telescope/linear_solve.hpp"

namespace telescope {
namespace {

// Joint integer content over a family of polynomials.
Rational joint_content(const std::vector<Poly>& ps) {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& p : ps) {
    for (const auto& c : p.coeffs()) {
      if (c.is_zero()) {
        continue;
      }
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    }
  }
  return num_gcd == 0 ? Rational(1) : Rational(num_gcd, den_lcm);
}

BiPoly bipoly_lcm(const BiPoly& a, const BiPoly& b) { return divide_exact(a * b, gcd(a, b)); }

}  // namespace

Recurrence Recurrence::canonical() const {
  if (coeffs.empty() || coeffs.front().is_zero()) {
    throw std::invalid_argument("recurrence with vanishing leading coefficient a_0");
  }
  Poly g(Var::n);
  for (const auto& c : coeffs) {
    g = gcd(g, c);
  }
  Recurrence out;
  for (const auto& c : coeffs) {
    out.coeffs.push_back(c / g);
  }
  Rational scale = joint_content(out.coeffs).inverse();
  if (out.coeffs.front().leading().sign() < 0) {
    scale = -scale;
  }
  for (auto& c : out.coeffs) {
    c *= scale;
  }
  return out;
}

std::string Recurrence::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) {
      continue;
    }
    if (!out.empty()) {
      out += " + ";
    }
    out += "(" + coeffs[j].to_string() + ")*S(n" + (j == 0 ? "" : "-" + std::to_string(j)) + ")";
  }
  return out.empty() ? "0" : out + " = 0";
}

bool proportional(const Recurrence& a, const Recurrence& b) {
  if (a.order() != b.order()) {
    return false;
  }
  std::size_t pivot = a.coeffs.size();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (!a.coeffs[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot == a.coeffs.size()) {
    return false;
  }
  if (b.coeffs[pivot].is_zero()) {
    return false;
  }
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (!(a.coeffs[i] * b.coeffs[pivot] == b.coeffs[i] * a.coeffs[pivot])) {
      return false;
    }
  }
  return true;
}

Recurrence WZCertificate::to_backward() const {
  const int order = this->order();
  Recurrence rec;
  for (int i = 0; i <= order; ++i) {
    rec.coeffs.push_back(forward[static_cast<std::size_t>(order - i)].shift(-order));
  }
  return rec;
}

std::string WZCertificate::serialize() const {
  std::string out = "R.num=" + R.num().to_string() + ";R.den=" + R.den().to_string();
  for (std::size_t j = 0; j < forward.size(); ++j) {
    out += ";c" + std::to_string(j) + "=" + forward[j].to_string();
  }
  return out;
}

std::string WZCertificate::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<TelescopingResult> zeilberger_at_order(const HyperTerm& t, int order) {
  if (order < 1) {
    throw std::invalid_argument("zeilberger: order must be >= 1");
  }
  const BiRatFunc k_ratio = shift_quotient(t, Var::k);
  if (k_ratio.is_zero()) {
    return std::nullopt;
  }

  // f(n+j,k)/f(n,k) = p_j(k)/d(k) over a common denominator.
  std::vector<BiRatFunc> ratios;
  BiPoly d(Rational(1));
  for (int j = 0; j <= order; ++j) {
    ratios.push_back(n_shift_ratio(t, j));
    d = bipoly_lcm(d, ratios.back().den());
  }
  std::vector<BiPoly> p;
  for (const auto& r : ratios) {
    p.push_back(r.num() * divide_exact(d, r.den()));
  }

  // t_k = f * sum_j c_j p_j / d; its k-ratio is P(k+1)/P(k) times this.
  const BiRatFunc reduced_ratio =
      k_ratio * BiRatFunc(d) / BiRatFunc(d.shift_k(1));
  const GosperForm form = gosper_normal_form(reduced_ratio);

  int p_degree = -1;
  for (auto& pj : p) {
    pj *= form.p;
    p_degree = std::max(p_degree, pj.degree_k());
  }
  const int x_degree = gosper_degree_bound(form.q, form.r, p_degree);

  // Unknowns: x_0..x_D, then c_0..c_{J-1}; c_J = 1 moves to the right.
  std::vector<BiPoly> columns;
  for (int i = 0; i <= x_degree; ++i) {
    columns.push_back(detail::gosper_column(form.q, form.r, i));
  }
  for (int j = 0; j < order; ++j) {
    columns.push_back(-p[static_cast<std::size_t>(j)]);
  }
  const BiPoly& target = p[static_cast<std::size_t>(order)];
  int rows = target.degree_k() + 1;
  for (const auto& c : columns) {
    rows = std::max(rows, c.degree_k() + 1);
  }
  RatFuncMatrix a(static_cast<std::size_t>(rows), RatFuncVector(columns.size()));
  RatFuncVector rhs(static_cast<std::size_t>(rows));
  for (int m = 0; m < rows; ++m) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      a[static_cast<std::size_t>(m)][i] = RatFunc(columns[i].coeff(m));
    }
    rhs[static_cast<std::size_t>(m)] = RatFunc(target.coeff(m));
  }
  const auto solution = solve_linear(a, rhs);
  if (!solution) {
    return std::nullopt;
  }

  const std::size_t x_count = static_cast<std::size_t>(std::max(0, x_degree + 1));
  QnPoly x(solution->begin(), solution->begin() + static_cast<std::ptrdiff_t>(x_count));
  std::vector<RatFunc> c(solution->begin() + static_cast<std::ptrdiff_t>(x_count), solution->end());
  c.emplace_back(Rational(1));

  // Clear denominators, then strip polynomial and integer content.
  Poly common(Rational(1));
  for (const auto& cj : c) {
    common = lcm(common, cj.den());
  }
  std::vector<Poly> forward;
  for (const auto& cj : c) {
    forward.push_back(cj.num() * (common / cj.den()));
  }
  Poly content(Var::n);
  for (const auto& fj : forward) {
    content = gcd(content, fj);
  }
  for (auto& fj : forward) {
    fj = fj / content;
  }
  Rational integer_scale = joint_content(forward).inverse();
  if (forward.back().leading().sign() < 0) {
    integer_scale = -integer_scale;
  }
  for (auto& fj : forward) {
    fj *= integer_scale;
  }
  const RatFunc scale = RatFunc(common * integer_scale, content);
  for (auto& xi : x) {
    xi *= scale;
  }

  WZCertificate cert;
  cert.forward = std::move(forward);
  cert.R = BiRatFunc(form.r) * qn_poly_to_ratfunc(x) / BiRatFunc(form.p * d);
  Recurrence rec = cert.to_backward();
  return TelescopingResult{std::move(rec), std::move(cert)};
}

std::optional<TelescopingResult> zeilberger(const HyperTerm& t, int max_order) {
  if (max_order < 1) {
    throw std::invalid_argument("zeilberger: max_order must be >= 1");
  }
  for (int order = 1; order <= max_order; ++order) {
    if (auto result = zeilberger_at_order(t, order)) {
      return result;
    }
  }
  return std::nullopt;
}

bool certificate_identity_holds(const HyperTerm& t, const WZCertificate& cert) {
  BiRatFunc lhs;
  for (int j = 0; j <= cert.order(); ++j) {
    const Poly& cj = cert.forward[static_cast<std::size_t>(j)];
    if (!cj.is_zero()) {
      lhs += BiRatFunc(BiPoly(cj)) * n_shift_ratio(t, j);
    }
  }
  const BiRatFunc rhs = cert.R.shift_k(1) * shift_quotient(t, Var::k) - cert.R;
  return lhs == rhs;
}

bool check_recurrence_numeric(const std::map<std::int64_t, Rational>& values, const Recurrence& rec,
                              std::int64_t n_lo, std::int64_t n_hi) {
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    Rational acc;
    for (int j = 0; j <= rec.order(); ++j) {
      const auto it = values.find(n - j);
      if (it == values.end()) {
        throw std::out_of_range("check_recurrence_numeric: no value for n=" + std::to_string(n - j));
      }
      acc += rec.coeffs[static_cast<std::size_t>(j)].eval(n) * it->second;
    }
    if (!acc.is_zero()) {
      return false;
    }
  }
  return true;
}

bool verify_certificate(const HyperTerm& t, const Support& support, const Recurrence& rec,
                        const WZCertificate& cert, std::int64_t n_lo, std::int64_t n_hi) {
  if (rec.order() != cert.order()) {
    throw ConventionError("recurrence has order " + std::to_string(rec.order()) +
                          " but certificate telescopes order " + std::to_string(cert.order()));
  }
  if (!proportional(rec, cert.to_backward())) {
    return false;
  }
  if (!certificate_identity_holds(t, cert)) {
    return false;
  }
  const std::int64_t first = std::max<std::int64_t>(n_lo, rec.order());
  std::map<std::int64_t, Rational> values;
  for (std::int64_t n = first - rec.order(); n <= n_hi; ++n) {
    values.emplace(n, sum_exact(t, support, n));
  }
  return check_recurrence_numeric(values, rec, first, n_hi);
}

}  // namespace telescope
