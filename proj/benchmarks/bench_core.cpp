#include <benchmark/benchmark.h>

#include <random>

#include "vconc/arf.hpp"
#include "vconc/families.hpp"
#include "vconc/invariants.hpp"

using namespace vconc;

namespace {

RatMatrix random_integer_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_Determinant(benchmark::State& state) {
  auto m = random_integer_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(16)->Arg(32);

void BM_CharPoly(benchmark::State& state) {
  auto m = random_integer_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(8)->Arg(16);

void BM_FactorCyclotomicProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Poly f = Poly::monomial(1, n) - Poly::constant(1);
  for (auto _ : state) benchmark::DoNotOptimize(factor_q(f));
}
BENCHMARK(BM_FactorCyclotomicProduct)->Arg(12)->Arg(24)->Arg(48);

void BM_HilbertSymbol(benchmark::State& state) {
  Place two = Place::prime(2), p = Place::prime(1447);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_symbol(-1447 * 11, 4 * 1447 * 11 + 1, two));
    benchmark::DoNotOptimize(hilbert_symbol(-1447 * 11, 4 * 1447 * 11 + 1, p));
  }
}
BENCHMARK(BM_HilbertSymbol);

void BM_OrderOfShift(benchmark::State& state) {
  auto a = project(kmn_couple(1447, 11, static_cast<int>(state.range(0))), Side::kPlus);
  for (auto _ : state) benchmark::DoNotOptimize(order(a));
}
BENCHMARK(BM_OrderOfShift)->Arg(-1)->Arg(0)->Arg(1)->Arg(2);

void BM_Knot685091Report(benchmark::State& state) {
  auto a = project(fixture("6.85091"), Side::kPlus);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_report(a, "6.85091"));
}
BENCHMARK(BM_Knot685091Report);

void BM_Arf(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> bit(0, 1);
  const auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix a(n, n);
  F2QuadForm q;
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = bit(rng);
    q = F2QuadForm(a);
  } while (!is_regular(q));
  for (auto _ : state) benchmark::DoNotOptimize(arf(q));
}
BENCHMARK(BM_Arf)->Arg(12)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
