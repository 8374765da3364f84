#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "telescope/biratfunc.hpp"
#include "telescope/hyperterm.hpp"
#include "telescope/poly.hpp"
#include "telescope/rational.hpp"

namespace testsupport {

using telescope::BiPoly;
using telescope::BiRatFunc;
using telescope::Integer;
using telescope::Poly;
using telescope::Rational;

// Oracles below deliberately avoid the library's own binomial/factorial.
inline Integer choose(std::int64_t top, std::int64_t bottom) {
  if (top < 0 || bottom < 0 || bottom > top) {
    return 0;
  }
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t i = 1; i <= bottom; ++i) {
    num *= top - bottom + i;
    den *= i;
  }
  return num / den;
}

inline Integer fact(std::int64_t m) {
  Integer r = 1;
  for (std::int64_t i = 2; i <= m; ++i) {
    r *= i;
  }
  return r;
}

inline Rational catalan_number(std::int64_t m) {
  return m < 0 ? Rational() : Rational(choose(2 * m, m), Integer(m + 1));
}

inline Rational first_sum(std::int64_t n) {
  Rational s;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Rational t = Rational(choose(n, k)) * catalan_number(k) * Rational(choose(2 * n - 2 * k, n - k));
    s += k % 2 == 0 ? t : -t;
  }
  return s;
}

inline Rational f_part_sum(std::int64_t n) {
  Rational s;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Rational t = Rational(Integer(choose(n, k) * choose(2 * k, k) * choose(2 * n - 2 * k, n - k)));
    s += k % 2 == 0 ? t : -t;
  }
  return s;
}

inline Rational g_part_sum(std::int64_t n) {
  Rational s;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Rational t = Rational(Integer(choose(n, k) * choose(2 * k, k + 1) * choose(2 * n - 2 * k, n - k)));
    s += k % 2 == 0 ? t : -t;
  }
  return s;
}

inline Rational second_sum(std::int64_t n) {
  Rational s;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Rational t = Rational(choose(n, k)) * catalan_number(k) * catalan_number(n - k);
    s += k % 2 == 0 ? t : -t;
  }
  return s;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  Rational rational(std::int64_t bound = 9) {
    const std::int64_t den = integer(1, 5);
    return Rational(Integer(integer(-bound, bound)), Integer(den));
  }

  Poly poly(int max_degree, telescope::Var var = telescope::Var::n) {
    std::vector<Rational> c;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) {
      c.push_back(rational());
    }
    return Poly(c, var);
  }

  BiPoly bipoly(int max_k, int max_n) {
    std::vector<Poly> c;
    const int d = static_cast<int>(integer(0, max_k));
    for (int i = 0; i <= d; ++i) {
      c.push_back(poly(max_n));
    }
    return BiPoly(c);
  }

  BiPoly nonzero_bipoly(int max_k, int max_n) {
    BiPoly p;
    while (p.is_zero()) {
      p = bipoly(max_k, max_n);
    }
    return p;
  }

  BiRatFunc biratfunc(int max_k = 2, int max_n = 2) {
    return BiRatFunc(bipoly(max_k, max_n), nonzero_bipoly(max_k, max_n));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testsupport
