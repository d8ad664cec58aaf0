#include <benchmark/benchmark.h>

#include "oinv/fundamental.hpp"
#include "oinv/invariance.hpp"
#include "oinv/metric.hpp"
#include "oinv/text.hpp"

using namespace oinv;

namespace {

const char* const kInvariant =
    "(x[1,1]^2 + x[1,2]^2 - x[1,3]^2)*(x[1,1]*x[2,1] + x[1,2]*x[2,2] - x[1,3]*x[2,3])"
    " + 3*(x[2,1]^2 + x[2,2]^2 - x[2,3]^2)";

void BM_PolynomialProduct(benchmark::State& state) {
  const Polynomial a = parse_polynomial("x[1,1] + 2*x[1,2] - x[2,1] + 1/3");
  const auto power = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a.pow(power));
}
BENCHMARK(BM_PolynomialProduct)->DenseRange(2, 8, 2);

void BM_GramSubstitution(benchmark::State& state) {
  const GramContext ctx(Signature(2, 1), 3);
  const Polynomial p = parse_polynomial("Y[1,1]*Y[2,2]*Y[3,3] - Y[1,2]^2*Y[3,3] + Y[1,3]*Y[2,3]");
  for (auto _ : state) benchmark::DoNotOptimize(substitute(p, ctx.gram_substitution()));
}
BENCHMARK(BM_GramSubstitution);

void BM_CheckInvariant(benchmark::State& state) {
  const GramContext ctx(Signature(2, 1), 2);
  const Polynomial f = parse_polynomial(kInvariant);
  for (auto _ : state) benchmark::DoNotOptimize(check_invariant(ctx, f));
}
BENCHMARK(BM_CheckInvariant);

void BM_RandomizedCheck(benchmark::State& state) {
  const GramContext ctx(Signature(2, 1), 2);
  const Polynomial f = parse_polynomial(kInvariant);
  for (auto _ : state) benchmark::DoNotOptimize(randomized_invariance_check(ctx, f, 100, 1));
}
BENCHMARK(BM_RandomizedCheck);

void BM_FftRewrite(benchmark::State& state) {
  const GramContext ctx(Signature(2, 1), 2);
  const Polynomial f = parse_polynomial(kInvariant);
  for (auto _ : state) benchmark::DoNotOptimize(fft_rewrite(ctx, f));
}
BENCHMARK(BM_FftRewrite);

void BM_NormalForm(benchmark::State& state) {
  const GramContext ctx(Signature(1, 0), 3);
  const Polynomial p =
      parse_polynomial("Y[1,1]*Y[2,2]*Y[3,3] + Y[1,2]^2*Y[3,3] - 5/7*Y[1,3]*Y[2,3]^2 + Y[1,1]^3");
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(ctx, p));
}
BENCHMARK(BM_NormalForm);

}  // namespace

BENCHMARK_MAIN();
