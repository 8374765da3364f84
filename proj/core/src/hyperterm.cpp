#include "telescope/hyperterm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "telescope/errors.hpp"
#include "telescope/poly_parse.hpp"

namespace telescope {
namespace {

std::int64_t mod2(std::int64_t x) { return ((x % 2) + 2) % 2; }

std::string lin_text(const LinForm& l, bool parenthesize_compound) {
  const std::string s = l.to_string();
  const int nonzero = (l.a != 0) + (l.b != 0) + (l.c != 0);
  const bool simple = nonzero <= 1 && (l.a == 0 || l.a == 1) && (l.b == 0 || l.b == 1) && l.c >= 0;
  if (parenthesize_compound && !simple) {
    return "(" + s + ")";
  }
  return s;
}

Rational factor_value(const Factor& f, std::int64_t n, std::int64_t k) {
  switch (f.kind) {
    case FactorKind::binomial: {
      const std::int64_t top = f.arg.eval(n, k);
      const std::int64_t bottom = f.bottom.eval(n, k);
      if (top < 0) {
        return Rational();
      }
      return Rational(binomial(Integer(std::to_string(top)), Integer(std::to_string(bottom))));
    }
    case FactorKind::catalan: {
      const std::int64_t m = f.arg.eval(n, k);
      if (m < 0) {
        return Rational();
      }
      return Rational(binomial(Integer(std::to_string(2 * m)), Integer(std::to_string(m))),
                      Integer(std::to_string(m + 1)));
    }
    case FactorKind::factorial: {
      const std::int64_t m = f.arg.eval(n, k);
      if (m < 0) {
        throw EvalError("factorial(" + f.arg.to_string() + ") at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + " has negative argument " + std::to_string(m));
      }
      return Rational(factorial(m));
    }
  }
  return Rational();
}

// Integer linear form scaled to primitive with a positive first nonzero
// coefficient among (b, a, c); returns the scale so that l = scale * key.
std::pair<LinForm, std::int64_t> primitive_key(const LinForm& l) {
  std::int64_t g = std::gcd(std::gcd(l.a, l.b), l.c);
  if (g == 0) {
    throw std::logic_error("zero linear factor");
  }
  const std::int64_t lead = l.b != 0 ? l.b : (l.a != 0 ? l.a : l.c);
  if (lead < 0) {
    g = -g;
  }
  return {LinForm{l.a / g, l.b / g, l.c / g}, g};
}

// Accumulates a product of linear forms with integer multiplicities.
class LinearProduct {
 public:
  void multiply(const LinForm& l, int power) {
    auto [key, scale] = primitive_key(l);
    constant_ *= Rational(scale).pow(power);
    counts_[key] += power;
  }
  void multiply(const Rational& c) { constant_ *= c; }

  BiRatFunc to_ratfunc() const {
    BiPoly num(constant_.numerator());
    BiPoly den(constant_.denominator());
    for (const auto& [l, e] : counts_) {
      if (e > 0) {
        num *= l.to_bipoly().pow(static_cast<unsigned>(e));
      } else if (e < 0) {
        den *= l.to_bipoly().pow(static_cast<unsigned>(-e));
      }
    }
    return BiRatFunc(std::move(num), std::move(den));
  }

 private:
  Rational constant_ = 1;
  std::map<LinForm, int> counts_;
};

// Multiplies in (l + s)! / l! raised to `power`.
void factorial_step(LinearProduct& prod, const LinForm& l, std::int64_t s, int power) {
  if (s > 0) {
    for (std::int64_t i = 1; i <= s; ++i) {
      prod.multiply(l + LinForm{0, 0, i}, power);
    }
  } else {
    for (std::int64_t i = 0; i < -s; ++i) {
      prod.multiply(l - LinForm{0, 0, i}, -power);
    }
  }
}

BiRatFunc shift_ratio(const HyperTerm& t, Var var, int steps) {
  LinearProduct prod;
  const auto coefficient = [var](const LinForm& l) { return var == Var::k ? l.b : l.a; };
  if (mod2(coefficient(t.sign()) * steps) == 1) {
    prod.multiply(Rational(-1));
  }
  for (const auto& [l, e] : t.factorial_decomposition()) {
    factorial_step(prod, l, coefficient(l) * steps, e);
  }
  return prod.to_ratfunc();
}

}  // namespace

std::string LinForm::to_string() const {
  std::string out;
  auto term = [&out](std::int64_t coef, const char* var) {
    if (coef == 0) {
      return;
    }
    if (out.empty()) {
      out += coef < 0 ? "-" : "";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    const std::int64_t m = coef < 0 ? -coef : coef;
    if (*var == '\0') {
      out += std::to_string(m);
    } else {
      if (m != 1) {
        out += std::to_string(m) + "*";
      }
      out += var;
    }
  };
  term(a, "n");
  term(b, "k");
  term(c, "");
  return out.empty() ? "0" : out;
}

HyperTerm::HyperTerm(LinForm sign, Rational constant, std::vector<Factor> factors)
    : sign_{mod2(sign.a), mod2(sign.b), mod2(sign.c)}, constant_(std::move(constant)) {
  std::map<std::pair<FactorKind, std::pair<LinForm, LinForm>>, int> merged;
  for (const auto& f : factors) {
    const LinForm bottom = f.kind == FactorKind::binomial ? f.bottom : LinForm{};
    merged[{f.kind, {f.arg, bottom}}] += f.exponent;
  }
  for (const auto& [key, e] : merged) {
    if (e != 0) {
      factors_.push_back(Factor{key.first, key.second.first, key.second.second, e});
    }
  }
}

std::vector<std::pair<LinForm, int>> HyperTerm::factorial_decomposition() const {
  std::vector<std::pair<LinForm, int>> out;
  for (const auto& f : factors_) {
    switch (f.kind) {
      case FactorKind::factorial:
        out.emplace_back(f.arg, f.exponent);
        break;
      case FactorKind::binomial:
        out.emplace_back(f.arg, f.exponent);
        out.emplace_back(f.bottom, -f.exponent);
        out.emplace_back(f.arg - f.bottom, -f.exponent);
        break;
      case FactorKind::catalan:
        out.emplace_back(2 * f.arg, f.exponent);
        out.emplace_back(f.arg, -f.exponent);
        out.emplace_back(f.arg + LinForm{0, 0, 1}, -f.exponent);
        break;
    }
  }
  return out;
}

std::string HyperTerm::to_string() const {
  std::vector<std::string> parts;
  if (sign_ != LinForm{}) {
    parts.push_back("(-1)^" + lin_text(sign_, true));
  }
  std::string prefix;
  if (constant_ == Rational(-1) && !factors_.empty()) {
    prefix = "-";
  } else if (!constant_.is_one() || factors_.empty()) {
    parts.push_back(constant_.to_string());
  }
  for (const auto& f : factors_) {
    std::string s;
    switch (f.kind) {
      case FactorKind::binomial:
        s = "binom(" + f.arg.to_string() + ", " + f.bottom.to_string() + ")";
        break;
      case FactorKind::catalan:
        s = "catalan(" + f.arg.to_string() + ")";
        break;
      case FactorKind::factorial:
        s = "factorial(" + f.arg.to_string() + ")";
        break;
    }
    if (f.exponent != 1) {
      s += "^" + std::to_string(f.exponent);
    }
    parts.push_back(std::move(s));
  }
  std::string out = prefix;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += " * ";
    }
    out += parts[i];
  }
  return out;
}

Support Support::make(Poly lower, Poly upper) {
  for (const Poly* p : {&lower, &upper}) {
    if (p->degree() > 1) {
      throw std::invalid_argument("summation bound " + p->to_string() + " is not affine in n");
    }
    const Rational slope = p->coeff(1);
    if (!(slope.is_zero() || slope == Rational(1, 2) || slope == Rational(1) || slope == Rational(2))) {
      throw std::invalid_argument("summation bound " + p->to_string() +
                                  " has slope outside {0, 1/2, 1, 2}");
    }
    if (!p->constant_term().is_integer()) {
      throw std::invalid_argument("summation bound " + p->to_string() + " has a non-integer offset");
    }
  }
  return Support{std::move(lower), std::move(upper)};
}

Support Support::parse(std::string_view lower, std::string_view upper) {
  return make(parse_poly_n(lower), parse_poly_n(upper));
}

std::pair<std::int64_t, std::int64_t> Support::bounds(std::int64_t n) const {
  const Rational lo = lower.eval(n);
  const Rational hi = upper.eval(n);
  if (!lo.is_integer() || !hi.is_integer()) {
    throw EvalError("summation bounds " + to_string() + " are not integers at n=" + std::to_string(n));
  }
  return {lo.to_int64(), hi.to_int64()};
}

std::string Support::to_string() const { return lower.to_string() + ".." + upper.to_string(); }

Rational eval_term(const HyperTerm& t, std::int64_t n, std::int64_t k) {
  Rational value = t.constant();
  if (mod2(t.sign().eval(n, k)) == 1) {
    value = -value;
  }
  for (const auto& f : t.factors()) {
    const Rational v = factor_value(f, n, k);
    if (v.is_zero()) {
      if (f.exponent < 0) {
        throw EvalError("zero factor raised to negative power at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k));
      }
      value = Rational();
      continue;
    }
    if (!value.is_zero()) {
      value *= v.pow(f.exponent);
    }
  }
  return value;
}

BiRatFunc shift_quotient(const HyperTerm& t, Var var) {
  if (var != Var::n && var != Var::k) {
    throw std::invalid_argument("shift_quotient: variable must be n or k");
  }
  return shift_ratio(t, var, 1);
}

BiRatFunc n_shift_ratio(const HyperTerm& t, int j) {
  if (j < 0) {
    throw std::invalid_argument("n_shift_ratio: negative shift");
  }
  return shift_ratio(t, Var::n, j);
}

Rational sum_exact(const HyperTerm& t, const Support& support, std::int64_t n) {
  const auto [lo, hi] = support.bounds(n);
  Rational acc;
  for (std::int64_t k = lo; k <= hi; ++k) {
    acc += eval_term(t, n, k);
  }
  return acc;
}

}  // namespace telescope
