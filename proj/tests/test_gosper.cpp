#include <gtest/gtest.h>

#include <functional>

#include "support.hpp"
#include "telescope/gosper.hpp"
#include "telescope/poly_parse.hpp"
#include "telescope/summand_parser.hpp"

using namespace telescope;
using testsupport::Random;

namespace {

BiPoly bp(const char* text) { return parse_bipoly(text); }

bool same_up_to_sign(const BiPoly& a, const BiPoly& b) {
  const BiPoly pa = a.primitive();
  const BiPoly pb = b.primitive();
  return pa == pb || pa == -pb;
}

void expect_normal_form(const BiRatFunc& ratio) {
  const GosperForm g = gosper_normal_form(ratio);
  const BiRatFunc rebuilt = BiRatFunc(g.p.shift_k(1), g.p) * BiRatFunc(g.q, g.r.shift_k(1));
  EXPECT_EQ(rebuilt, ratio) << ratio.to_string();
  EXPECT_TRUE(integer_shift_roots(g.q, g.r).empty()) << ratio.to_string();
  for (int j = 1; j <= 40; ++j) {
    EXPECT_TRUE(gcd_over_qn(g.q, g.r.shift_k(j)).is_n_only()) << ratio.to_string() << " j=" << j;
  }
}

using TermFn = std::function<Rational(std::int64_t, std::int64_t)>;

// Checks g(n,k+1) - g(n,k) = f(n,k) with g = R f at random points.
int check_telescopes(const BiRatFunc& R, const TermFn& f, Random& rng, std::int64_t k_offset) {
  int checked = 0;
  for (int attempt = 0; attempt < 400 && checked < 50; ++attempt) {
    const std::int64_t n = rng.integer(1, 30);
    const std::int64_t k = k_offset * n + rng.integer(0, 30);
    try {
      const Rational g0 = R.eval(n, k) * f(n, k);
      const Rational g1 = R.eval(n, k + 1) * f(n, k + 1);
      EXPECT_EQ(g1 - g0, f(n, k)) << "n=" << n << " k=" << k;
      ++checked;
    } catch (const std::domain_error&) {
      // R has a pole at this point
    }
  }
  return checked;
}

TermFn from_term(const HyperTerm& t) {
  return [t](std::int64_t n, std::int64_t k) { return eval_term(t, n, k); };
}

}  // namespace

TEST(GosperNormalForm, PascalRatio) {
  const GosperForm g = gosper_normal_form(BiRatFunc(bp("n-k"), bp("k+1")));
  EXPECT_TRUE(g.p.is_n_only());
  EXPECT_TRUE(same_up_to_sign(g.q, bp("n-k")));
  EXPECT_TRUE(same_up_to_sign(g.r, bp("k")));
}

TEST(GosperNormalForm, KTimesKFactorial) {
  const GosperForm g = gosper_normal_form(BiRatFunc(bp("(k+1)^2"), bp("k")));
  EXPECT_TRUE(same_up_to_sign(g.p, bp("k")));
  EXPECT_TRUE(same_up_to_sign(g.q, bp("k+1")));
  EXPECT_TRUE(g.r.is_n_only());
}

TEST(GosperNormalForm, UnitRatio) {
  const GosperForm g = gosper_normal_form(BiRatFunc(Rational(1)));
  EXPECT_TRUE(g.p.is_n_only());
  EXPECT_TRUE(g.q.is_n_only());
  EXPECT_TRUE(g.r.is_n_only());
  EXPECT_THROW(gosper_normal_form(BiRatFunc()), std::domain_error);
}

TEST(GosperNormalForm, InvariantsOnSummandRatios) {
  for (const char* text : {"(-1)^k * binom(n,k) * catalan(k) * binom(2*n-2*k, n-k)",
                           "(-1)^k * binom(n,k) * catalan(k) * catalan(n-k)", "binom(n,k)^2",
                           "binom(k,n)", "factorial(k-1) * factorial(k+5)^-1", "binom(n+k,2*k) * catalan(k+3)"}) {
    expect_normal_form(shift_quotient(parse_summand(text), Var::k));
  }
  expect_normal_form(BiRatFunc(bp("(k+1)^2"), bp("k")));
  expect_normal_form(BiRatFunc(bp("(k+n)(k+3)"), bp("(k-n+1)(k+7)(2k+1)")));
}

TEST(IntegerShiftRoots, FindsAllShifts) {
  EXPECT_EQ(integer_shift_roots(bp("(k+5)(k-n)"), bp("(k+2)(k+n)")), std::vector<int>{3});
  EXPECT_EQ(integer_shift_roots(bp("k+n+4"), bp("k+n")), std::vector<int>{4});
  EXPECT_TRUE(integer_shift_roots(bp("k"), bp("k+1")).empty());
  EXPECT_EQ(integer_shift_roots(bp("(k+1)(k+6)"), bp("k")), (std::vector<int>{1, 6}));
}

TEST(GosperDegreeBound, BinomialHasNoCandidate) {
  EXPECT_EQ(gosper_degree_bound(bp("n-k"), bp("k"), 0), -1);
}

TEST(GosperSum, KTimesKFactorial) {
  const auto cert = gosper_sum(BiRatFunc(bp("(k+1)^2"), bp("k")));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->R, BiRatFunc(Rational(1), bp("k")));
  Random rng(31);
  const TermFn f = [](std::int64_t, std::int64_t k) { return Rational(Integer(k * testsupport::fact(k))); };
  EXPECT_EQ(check_telescopes(cert->R, f, rng, 0), 50);
}

TEST(GosperSum, BinomialIsNotSummable) {
  EXPECT_FALSE(gosper_sum(BiRatFunc(bp("n-k"), bp("k+1"))));
  EXPECT_FALSE(gosper_sum(shift_quotient(parse_summand("binom(n,k)"), Var::k)));
  EXPECT_FALSE(gosper_sum(shift_quotient(parse_summand("factorial(k)"), Var::k)));
}

TEST(GosperSum, Geometric) {
  const auto cert = gosper_sum(BiRatFunc(Rational(2)));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->R, BiRatFunc(Rational(1)));
  Random rng(32);
  const TermFn f = [](std::int64_t, std::int64_t k) { return Rational(2).pow(k); };
  EXPECT_EQ(check_telescopes(cert->R, f, rng, 0), 50);
}

TEST(GosperSum, SoundnessOnSummableTerms) {
  struct Case {
    const char* text;
    std::int64_t k_offset;  // points start at k_offset * n
  };
  Random rng(33);
  for (const Case& c : {Case{"(-1)^k * binom(n,k)", 0}, Case{"binom(k,n)", 1},
                        Case{"factorial(k-1) * factorial(k+1)^-1", 0},
                        Case{"factorial(k) * factorial(k+n+1)^-1", 0},
                        Case{"factorial(k+n) * factorial(k)^-1", 0}}) {
    const HyperTerm t = parse_summand(c.text);
    const BiRatFunc ratio = shift_quotient(t, Var::k);
    const auto cert = gosper_sum(ratio);
    ASSERT_TRUE(cert) << c.text;
    EXPECT_EQ(cert->R.shift_k(1) * ratio - cert->R, BiRatFunc(Rational(1))) << c.text;
    EXPECT_EQ(check_telescopes(cert->R, from_term(t), rng, c.k_offset), 50) << c.text;
  }
}

TEST(GosperSum, NonSummableSummands) {
  for (const char* text : {"(-1)^k * binom(n,k) * catalan(k) * binom(2*n-2*k, n-k)",
                           "(-1)^k * binom(n,k) * catalan(k) * catalan(n-k)", "binom(n,k)^2"}) {
    EXPECT_FALSE(gosper_sum(shift_quotient(parse_summand(text), Var::k))) << text;
  }
}
