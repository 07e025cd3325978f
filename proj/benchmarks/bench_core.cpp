#include <benchmark/benchmark.h>

#include "ahyp/chern_fano.hpp"
#include "ahyp/chow_ring.hpp"
#include "ahyp/genus_bound.hpp"
#include "ahyp/schur_oracle.hpp"
#include "ahyp/section_dominating.hpp"

namespace {

using namespace ahyp;

void BM_MultiplyGiambelli(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RingContext g(3, n);
  const ChowElement x = make_class(g, Partition({n - 4, 2, 1}));
  const ChowElement y = make_class(g, Partition({2, 2, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, y));
}
BENCHMARK(BM_MultiplyGiambelli)->Arg(7)->Arg(9)->Arg(12);

void BM_MultiplySchurOracle(benchmark::State& state) {
  const RingContext g(3, 7);
  const ChowElement x = make_class(g, Partition({3, 2, 1}));
  const ChowElement y = make_class(g, Partition({2, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(schur_oracle_multiply(x, y));
}
BENCHMARK(BM_MultiplySchurOracle);

void BM_TopChernSym(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(top_chern_sym(d, d + 3));
}
BENCHMARK(BM_TopChernSym)->Arg(5)->Arg(15)->Arg(30);

void BM_PairedRearrangement(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paired_rearrangement(d, d + 3));
}
BENCHMARK(BM_PairedRearrangement)->Arg(6)->Arg(12)->Arg(20);

void BM_LineCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(line_count(n));
}
BENCHMARK(BM_LineCount)->DenseRange(3, 8);

void BM_Certificate(benchmark::State& state) {
  const auto v = product({grassmannian(2, 5), projective(2), flag({1, 2}, 4)});
  const DegreeVector d(hyperbolicity_threshold(v));
  for (auto _ : state) benchmark::DoNotOptimize(hyperbolicity_certificate(v, d));
}
BENCHMARK(BM_Certificate);

void BM_SectionDominating(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_projective_space(n, 6));
}
BENCHMARK(BM_SectionDominating)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
