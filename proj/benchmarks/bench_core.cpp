#include <benchmark/benchmark.h>

#include "milnor/analyzer.hpp"
#include "milnor/aomoto.hpp"
#include "milnor/aomoto_oracle.hpp"
#include "milnor/arrangement.hpp"
#include "milnor/lattice.hpp"
#include "milnor/matrix.hpp"

namespace {

using namespace milnor;

void BM_rank2_flats_braid6(benchmark::State& state) {
  Arrangement a = gen_braid(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank2_flats(a));
  }
}
BENCHMARK(BM_rank2_flats_braid6);

void BM_aomoto_f3_braid5(benchmark::State& state) {
  FlatList flats = rank2_flats(gen_braid(5));
  WeightVector w = WeightVector::all_ones(flats.d(), CoefficientRing::prime(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aomoto_h1(flats, w));
  }
}
BENCHMARK(BM_aomoto_f3_braid5);

void BM_oracle_f3_braid4(benchmark::State& state) {
  FlatList flats = rank2_flats(gen_braid(4));
  WeightVector w = WeightVector::all_ones(flats.d(), CoefficientRing::prime(3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(os_oracle_h1(flats, w));
  }
}
BENCHMARK(BM_oracle_f3_braid4);

void BM_analyze_braid4(benchmark::State& state) {
  Arrangement a = gen_braid(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(a, 1));
  }
}
BENCHMARK(BM_analyze_braid4);

void BM_analyze_ex38(benchmark::State& state) {
  Arrangement a = gen_named("ex38");
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(a));
  }
}
BENCHMARK(BM_analyze_ex38);

void BM_rref_rational(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix<Rational> m(n, n, Rational(0));
  // Deterministic integer fill with plenty of fill-in during elimination.
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m.at(r, c) = Rational(static_cast<long>((r * 7 + c * 3) % 11 - 5));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_rref_rational)->Arg(16)->Arg(32);

void BM_cyclo_mult(benchmark::State& state) {
  Cyclo a = Cyclo::zeta(4) + Cyclo(4, make_rational(3, 2));
  Cyclo b = Cyclo::zeta(4) * Cyclo(4, 5) - Cyclo(4, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_cyclo_mult);

}  // namespace

BENCHMARK_MAIN();
