// Serial reference against the OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "hgs/asymmetry.hpp"
#include "hgs/membership.hpp"
#include "hgs/parse.hpp"
#include "hgs/quadratic.hpp"

using namespace hgs;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

const HypergeomSeq& class_c() {
  static const HypergeomSeq s = make_sequence(parse_poly("x^2-2*x-1"), parse_poly("x^2-3"), 1);
  return s;
}

void BM_ValuationProfile(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(valuation_profile(class_c(), 7, 200000, mode(st)));
}

void BM_HeightProfile(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(height_profile(class_c(), 8000, 100, false, mode(st)));
}

void BM_PrimeScan(benchmark::State& st) {
  const RatPoly f = parse_poly("(x^4-10*x^2+1)*x^2"), g = parse_poly("(x^2-2)*(x^2-3)*(x^2-6)");
  ScanOptions opts;
  opts.exec = mode(st);
  for (auto _ : st) benchmark::DoNotOptimize(find_asymmetric_prime(f, g, 5, 20000, opts));
}

void BM_Equidistribution(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(equidistribution_sample(2, 1, 0, 0, 1, 1000000, 10, mode(st)));
}

void BM_DecideBatch(benchmark::State& st) {
  std::vector<MembershipQuery> q;
  for (int k = 1; k <= 16; ++k) q.push_back({class_c(), term(class_c(), 40 * k)});
  for (auto _ : st) benchmark::DoNotOptimize(decide_batch(q, {}, mode(st)));
}

}  // namespace

BENCHMARK(BM_ValuationProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeightProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimeScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Equidistribution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
