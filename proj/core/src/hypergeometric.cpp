#include "telescope/hypergeometric.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "telescope/errors.hpp"

namespace telescope {
namespace {

HalfInt half_param(const Rational& r, const char* what) {
  try {
    return HalfInt::from_rational(r);
  } catch (const std::invalid_argument&) {
    throw EvalError(std::string(what) + " = " + r.to_string() + " is not a half-integer");
  }
}

GammaProduct gamma_finite(HalfInt x, const char* where) {
  const GammaValue g = gamma_half(x);
  if (g.pole) {
    throw EvalError(std::string("Gamma pole at ") + x.to_string() + " in " + where);
  }
  return g.finite;
}

const GammaProduct kPi{1, 2};

}  // namespace

std::int64_t termination_index(const PFQSpec& spec) {
  std::int64_t n = std::numeric_limits<std::int64_t>::max();
  for (const auto& u : spec.upper) {
    if (u.is_nonpositive_integer()) {
      n = std::min(n, -u.twice_value / 2);
    }
  }
  if (n == std::numeric_limits<std::int64_t>::max()) {
    throw EvalError("hypergeometric series does not terminate (no non-positive integer upper parameter)");
  }
  return n;
}

Rational pfq_terminating(const PFQSpec& spec) {
  const std::int64_t last = termination_index(spec);
  for (const auto& l : spec.lower) {
    if (l.is_nonpositive_integer() && -l.twice_value / 2 < last) {
      throw EvalError("lower parameter " + l.to_string() + " makes a Pochhammer symbol vanish before term " +
                      std::to_string(last));
    }
  }
  Rational term = 1;
  Rational sum = 1;
  for (std::int64_t j = 0; j < last; ++j) {
    // term_{j+1} = term_j * prod(u + j) / (prod(l + j) * (j + 1))
    for (const auto& u : spec.upper) {
      term *= u.value() + j;
    }
    Rational den = j + 1;
    for (const auto& l : spec.lower) {
      den *= l.value() + j;
    }
    term /= den;
    sum += term;
  }
  return sum;
}

PFQSpec w00_spec(HalfInt a, HalfInt b, HalfInt c) {
  const HalfInt lower1 = half_param((a.value() + b.value() + 1) / 2, "(1+a+b)/2");
  return PFQSpec{{a, b, c}, {lower1, HalfInt{2 * c.twice_value}}};
}

PFQSpec w01_spec(HalfInt a, HalfInt b, HalfInt c) {
  PFQSpec spec = w00_spec(a, b, c);
  spec.lower[1] = HalfInt{2 * c.twice_value + 2};
  return spec;
}

GammaProduct watson_w00(HalfInt a, HalfInt b, HalfInt c) {
  if (a.twice_value == 0 || b.twice_value == 0) {
    return GammaProduct{1, 0};
  }
  if (!a.is_nonpositive_integer() && !b.is_nonpositive_integer()) {
    throw EvalError("watson_w00: neither a nor b is a non-positive integer; series does not terminate");
  }
  const Rational av = a.value();
  const Rational bv = b.value();
  const Rational cv = c.value();
  const std::array<HalfInt, 4> numerator = {
      HalfInt{1},
      half_param(cv + Rational(1, 2), "c+1/2"),
      half_param((av + bv + 1) / 2, "(1+a+b)/2"),
      half_param((1 - av - bv) / 2 + cv, "(1-a-b)/2+c"),
  };
  const std::array<HalfInt, 4> denominator = {
      half_param((1 + av) / 2, "(1+a)/2"),
      half_param((1 + bv) / 2, "(1+b)/2"),
      half_param((1 - av) / 2 + cv, "(1-a)/2+c"),
      half_param((1 - bv) / 2 + cv, "(1-b)/2+c"),
  };
  GammaProduct top{1, 0};
  for (const HalfInt x : numerator) {
    top = top * gamma_finite(x, "Watson numerator");
  }
  GammaProduct bottom{1, 0};
  for (const HalfInt x : denominator) {
    const GammaValue g = gamma_half(x);
    if (g.pole) {
      return GammaProduct{0, 0};
    }
    bottom = bottom * g.finite;
  }
  const GammaProduct result = top / bottom;
  if (!result.is_rational()) {
    throw EvalError("watson_w00: net power of pi " + std::to_string(result.pi_half_power) + "/2");
  }
  return result;
}

Rational chu_w01(HalfInt a, HalfInt b, HalfInt c) {
  const Rational av = a.value();
  const Rational bv = b.value();
  const Rational reduction_den = (1 + av + bv) * (2 * c.value() + 1);
  if (reduction_den.is_zero()) {
    throw EvalError("chu_w01: (1+a+b)(2c+1) vanishes");
  }
  Rational w = watson_w00(a, b, c).rational();
  const Rational weight = av * bv / reduction_den;
  if (!weight.is_zero()) {
    const HalfInt one = HalfInt::from_int(1);
    w -= weight * watson_w00(a + one, b + one, c + one).rational();
  }
  return w;
}

GammaProduct closed_form_F_exact(std::int64_t n) {
  if (n < 0 || n % 2 != 0) {
    throw EvalError("closed_form_F requires even n >= 0, got " + std::to_string(n));
  }
  const GammaProduct g1 = gamma_finite(HalfInt{n + 1}, "closed_form_F");
  const GammaProduct g2 = gamma_finite(HalfInt{n + 2}, "closed_form_F");
  const GammaProduct four_n{Rational(4).pow(n), 0};
  return g1 * g1 * four_n / (kPi * g2 * g2);
}

GammaProduct closed_form_G_exact(std::int64_t n) {
  if (n < 1 || n % 2 != 1) {
    throw EvalError("closed_form_G requires odd n >= 1, got " + std::to_string(n));
  }
  const GammaProduct g1 = gamma_finite(HalfInt{n + 2}, "closed_form_G");
  const GammaProduct g2 = gamma_finite(HalfInt{n + 3}, "closed_form_G");
  const GammaProduct four_n{-Rational(4).pow(n), 0};
  return g1 * g1 * four_n / (kPi * g2 * g2);
}

Rational closed_form_F(std::int64_t n) { return closed_form_F_exact(n).rational(); }

Rational closed_form_G(std::int64_t n) { return closed_form_G_exact(n).rational(); }

Rational second_identity_3f2(std::int64_t n) {
  if (n < 0) {
    throw EvalError("second_identity_3f2 requires n >= 0");
  }
  const Integer f2n = factorial(2 * n);
  const Integer fn = factorial(n);
  const Integer num = factorial(2 * n + 1) * f2n * f2n * f2n;
  const Integer den = factorial(4 * n) * fn * fn * fn * factorial(n + 1);
  return Rational(num, den);
}

}  // namespace telescope
