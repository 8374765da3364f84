#include <gtest/gtest.h>

#include "support.hpp"
#include "telescope/errors.hpp"
#include "telescope/poly_parse.hpp"
#include "telescope/summand_parser.hpp"

using namespace telescope;
using testsupport::Random;

namespace {

const char* kFirst = "(-1)^k * binom(n,k) * catalan(k) * binom(2*n-2*k, n-k)";
const char* kSecond = "(-1)^k * binom(n,k) * catalan(k) * catalan(n-k)";

const std::vector<std::string>& sample_terms() {
  static const std::vector<std::string> terms = {
      kFirst,
      kSecond,
      "binom(n,k)",
      "(-1)^k * binom(n,k) * binom(2*k,k) * binom(2*n-2*k, n-k)",
      "(-1)^k * binom(n,k) * binom(2*k,k+1) * binom(2*n-2*k, n-k)",
      "binom(n,k)^2",
      "2^1 * factorial(k) * factorial(n+k)^-1",
      "(-1)^(n+k) * catalan(n+k) * binom(2*n, k)^2",
      "3/4 * binom(n+k, 2*k) * factorial(n-k)^2",
  };
  return terms;
}

Support full_support() { return Support::parse("0", "n"); }

}  // namespace

TEST(ParseSummand, FirstIdentityStructure) {
  const HyperTerm t = parse_summand(kFirst);
  EXPECT_EQ(t.sign(), (LinForm{0, 1, 0}));
  EXPECT_EQ(t.constant(), Rational(1));
  ASSERT_EQ(t.factors().size(), 3u);
  EXPECT_EQ(t.to_string(), "(-1)^k * binom(n, k) * binom(2*n - 2*k, n - k) * catalan(k)");
}

TEST(ParseSummand, SingleFactor) {
  const HyperTerm t = parse_summand("binom(n,k)");
  ASSERT_EQ(t.factors().size(), 1u);
  EXPECT_EQ(t.factors()[0].kind, FactorKind::binomial);
  EXPECT_EQ(t.factors()[0].arg, (LinForm{1, 0, 0}));
  EXPECT_EQ(t.factors()[0].bottom, (LinForm{0, 1, 0}));
  EXPECT_EQ(t.sign(), (LinForm{}));
}

TEST(ParseSummand, SecondIdentityStructure) {
  const HyperTerm t = parse_summand(kSecond);
  ASSERT_EQ(t.factors().size(), 3u);
  EXPECT_EQ(t.factors()[1].kind, FactorKind::catalan);
}

TEST(ParseSummand, Errors) {
  try {
    parse_summand("binom(n*k, k)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("non-linear"), std::string::npos);
  }
  EXPECT_THROW(parse_summand("binom(n,k)^0"), ParseError);
  EXPECT_THROW(parse_summand("gamma(k)"), ParseError);
  EXPECT_THROW(parse_summand("binom(n,m)"), ParseError);
  EXPECT_THROW(parse_summand("binom(n,k"), ParseError);
  EXPECT_THROW(parse_summand(""), ParseError);
}

TEST(ParseSummand, MergesEqualBases) {
  EXPECT_EQ(parse_summand("binom(n,k) * binom(n,k)"), parse_summand("binom(n,k)^2"));
  EXPECT_EQ(parse_summand("(-1)^k * (-1)^k * binom(n,k)"), parse_summand("binom(n,k)"));
}

TEST(ParseSummand, RoundTrip) {
  for (const auto& text : sample_terms()) {
    const HyperTerm t = parse_summand(text);
    EXPECT_EQ(parse_summand(t.to_string()), t) << text << " -> " << t.to_string();
    EXPECT_EQ(parse_summand(t.to_string()).to_string(), t.to_string());
  }
}

TEST(EvalTerm, Examples) {
  const HyperTerm t = parse_summand(kFirst);
  EXPECT_EQ(eval_term(t, 2, 1), Rational(-4));
  EXPECT_EQ(eval_term(t, 2, 5), Rational(0));
  EXPECT_EQ(eval_term(parse_summand("binom(n,k)"), 5, 2), Rational(10));
}

TEST(EvalTerm, SupportConvention) {
  const HyperTerm t = parse_summand("binom(n,k) * catalan(k)");
  EXPECT_EQ(eval_term(t, 3, -1), Rational(0));
  EXPECT_EQ(eval_term(t, -2, 1), Rational(0));
  EXPECT_THROW(eval_term(parse_summand("factorial(n-k)"), 2, 3), EvalError);
  EXPECT_THROW(eval_term(parse_summand("binom(n,k)^-1"), 2, 3), EvalError);
}

TEST(EvalTerm, AgreesWithIndependentOracle) {
  const HyperTerm t = parse_summand(kFirst);
  for (std::int64_t n = 0; n <= 25; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      Rational expected = Rational(testsupport::choose(n, k)) * testsupport::catalan_number(k) *
                          Rational(testsupport::choose(2 * n - 2 * k, n - k));
      if (k % 2) {
        expected = -expected;
      }
      EXPECT_EQ(eval_term(t, n, k), expected);
    }
  }
}

TEST(ShiftQuotient, Examples) {
  EXPECT_EQ(shift_quotient(parse_summand("binom(n,k)"), Var::k), BiRatFunc(parse_bipoly("n-k"), parse_bipoly("k+1")));
  EXPECT_EQ(shift_quotient(parse_summand(kFirst), Var::k),
            BiRatFunc(parse_bipoly("-(n-k)^2(2k+1)"), parse_bipoly("(k+1)(k+2)(2n-2k-1)")));
  EXPECT_EQ(shift_quotient(parse_summand("catalan(k)"), Var::k),
            BiRatFunc(parse_bipoly("2(2k+1)"), parse_bipoly("k+2")));
}

TEST(ShiftQuotient, CatalanRatioMatchesOracle) {
  const BiRatFunc q = shift_quotient(parse_summand("catalan(k)"), Var::k);
  for (std::int64_t k = 0; k <= 20; ++k) {
    EXPECT_EQ(q.eval(0, k), testsupport::catalan_number(k + 1) / testsupport::catalan_number(k));
  }
}

TEST(ShiftQuotient, AgreesWithEvaluationOnRandomTriples) {
  Random rng(21);
  const auto& terms = sample_terms();
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const HyperTerm t = parse_summand(terms[rng.integer(0, terms.size() - 1)]);
    const std::int64_t n = rng.integer(0, 30);
    const std::int64_t k = rng.integer(0, n);
    for (const Var v : {Var::k, Var::n}) {
      const BiRatFunc q = shift_quotient(t, v);
      try {
        const Rational here = eval_term(t, n, k);
        const Rational next = v == Var::k ? eval_term(t, n, k + 1) : eval_term(t, n + 1, k);
        EXPECT_EQ(next, q.eval(n, k) * here) << t.to_string() << " n=" << n << " k=" << k;
        ++checked;
      } catch (const std::domain_error&) {
        // pole of the quotient, or a factorial of a negative argument
      }
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(ShiftQuotient, NShiftRatioComposes) {
  const HyperTerm t = parse_summand(kFirst);
  const BiRatFunc r1 = n_shift_ratio(t, 1);
  EXPECT_EQ(r1, shift_quotient(t, Var::n));
  EXPECT_EQ(n_shift_ratio(t, 2), r1 * r1.shift_n(1));
  EXPECT_EQ(n_shift_ratio(t, 0), BiRatFunc(Rational(1)));
}

TEST(SumExact, Examples) {
  EXPECT_EQ(sum_exact(parse_summand(kFirst), full_support(), 2), Rational(4));
  EXPECT_EQ(sum_exact(parse_summand(kFirst), full_support(), 3), Rational(9));
  EXPECT_EQ(sum_exact(parse_summand(kSecond), full_support(), 1), Rational(0));
}

TEST(SumExact, FirstIdentityIsPerfectSquare) {
  const HyperTerm t = parse_summand(kFirst);
  for (std::int64_t n = 0; n <= 60; ++n) {
    const Rational s = sum_exact(t, full_support(), n);
    ASSERT_TRUE(s.is_integer());
    ASSERT_GE(s.sign(), 0);
    EXPECT_TRUE(mpz_perfect_square_p(s.numerator().get_mpz_t())) << "n=" << n;
    EXPECT_EQ(s, testsupport::first_sum(n));
  }
}

TEST(Support, BoundsAndValidation) {
  const Support half = Support::parse("0", "n/2");
  EXPECT_EQ(half.bounds(6), (std::pair<std::int64_t, std::int64_t>(0, 3)));
  EXPECT_THROW(half.bounds(5), EvalError);
  EXPECT_THROW(Support::parse("0", "3n"), std::invalid_argument);
  EXPECT_EQ(sum_exact(parse_summand("binom(n,k)"), Support::parse("n", "n-1"), 4), Rational(0));
}
