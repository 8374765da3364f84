#include <benchmark/benchmark.h>

#include "telescope/bipoly.hpp"
#include "telescope/biratfunc.hpp"
#include "telescope/gosper.hpp"
#include "telescope/poly_parse.hpp"
#include "telescope/summand_parser.hpp"
#include "telescope/zeilberger.hpp"

using namespace telescope;

namespace {

const char* kFirst = "(-1)^k * binom(n,k) * catalan(k) * binom(2*n-2*k, n-k)";
const char* kSecond = "(-1)^k * binom(n,k) * catalan(k) * catalan(n-k)";

void BM_ZeilbergerFirst(benchmark::State& state) {
  const HyperTerm t = parse_summand(kFirst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeilberger(t, 3));
  }
}
BENCHMARK(BM_ZeilbergerFirst)->Unit(benchmark::kMillisecond);

void BM_ZeilbergerSecond(benchmark::State& state) {
  const HyperTerm t = parse_summand(kSecond);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeilberger(t, 3));
  }
}
BENCHMARK(BM_ZeilbergerSecond)->Unit(benchmark::kMillisecond);

void BM_SumExact(benchmark::State& state) {
  const HyperTerm t = parse_summand(kFirst);
  const Support support = Support::parse("0", "n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_exact(t, support, state.range(0)));
  }
}
BENCHMARK(BM_SumExact)->Arg(25)->Arg(100)->Arg(400);

void BM_GosperNormalForm(benchmark::State& state) {
  const BiRatFunc ratio = shift_quotient(parse_summand(kFirst), Var::k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gosper_normal_form(ratio));
  }
}
BENCHMARK(BM_GosperNormalForm);

void BM_BiPolyGcd(benchmark::State& state) {
  const BiPoly c = parse_bipoly("(2k - n + 3)(k^2 + n*k - 1)");
  const BiPoly a = parse_bipoly("(k + n)^3 - 5k + 7") * c;
  const BiPoly b = parse_bipoly("k^3 n^2 - 4k + n^3 + 2") * c;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcd(a, b));
  }
}
BENCHMARK(BM_BiPolyGcd);

}  // namespace
BENCHMARK_MAIN();
