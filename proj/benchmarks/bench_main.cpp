#include <benchmark/benchmark.h>

#include "homcoh/homcoh.hpp"

using namespace homcoh;

namespace {

HomAlgebra worked_example() {
  const Scalar p[2] = {1, -1};
  return std::get<HomAlgebra>(build_example(ExampleName::assoc2dim, p));
}

HomAlgebra sl2_identity() {
  const Scalar p[6] = {1, 1, 0, 0, 0, 0};
  return std::get<HomAlgebra>(build_example(ExampleName::sl2, p));
}

// Dense pseudo-random rational matrix, deterministic.
Matrix filled(std::size_t r, std::size_t c) {
  Matrix m(r, c);
  unsigned long x = 12345;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      x = x * 6364136223846793005UL + 1442695040888963407UL;
      m(i, j) = Scalar(static_cast<long>((x >> 33) % 7) - 3, static_cast<long>((x >> 40) % 3) + 1);
    }
  return m;
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = filled(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_CohomologyWorkedExample(benchmark::State& state) {
  auto a = worked_example();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(a, n));
}
BENCHMARK(BM_CohomologyWorkedExample)->DenseRange(1, 4);

void BM_CohomologySl2(benchmark::State& state) {
  auto a = sl2_identity();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(a, n));
}
BENCHMARK(BM_CohomologySl2)->DenseRange(1, 3);

void BM_GerstenhaberSquare(benchmark::State& state) {
  auto a = worked_example();
  Cochain mu = a.mu().as_cochain();
  for (auto _ : state) benchmark::DoNotOptimize(gerstenhaber_bracket(mu, mu, a.alpha()));
}
BENCHMARK(BM_GerstenhaberSquare);

void BM_NrSquare(benchmark::State& state) {
  auto a = sl2_identity();
  Cochain b = a.mu().as_cochain();
  for (auto _ : state) benchmark::DoNotOptimize(nr_bracket(b, b, a.alpha()));
}
BENCHMARK(BM_NrSquare);

void BM_Obstruction(benchmark::State& state) {
  auto a = worked_example();
  auto z = cohomology(a, 2).cocycles;
  Deformation d(a, {Cochain::from_coordinates(2, 2, z[0])});
  for (auto _ : state) benchmark::DoNotOptimize(obstruction(d));
}
BENCHMARK(BM_Obstruction);

}  // namespace

BENCHMARK_MAIN();
