#include <random>

#include <benchmark/benchmark.h>

#include "fgi/diagrams/trees.hpp"
#include "fgi/inversion/lagrange_good.hpp"
#include "fgi/inversion/reversion.hpp"
#include "fgi/permanent.hpp"

namespace {

fgi::Matrix random_matrix(std::size_t k, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  fgi::Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = fgi::Rational(num(gen), den(gen));
  return m;
}

// F_i = 2 X_i + X_{i+1}^2 + X_i X_{i+1}, indices mod n
fgi::SeriesSystem sample_system(std::size_t n, unsigned trunc) {
  std::vector<fgi::Series> comps;
  for (std::size_t i = 0; i < n; ++i) {
    const fgi::Series xi = fgi::Series::variable(n, trunc, i);
    const fgi::Series xj = fgi::Series::variable(n, trunc, (i + 1) % n);
    comps.push_back(xi * fgi::Rational(2) + xj * xj + xi * xj);
  }
  return fgi::SeriesSystem(comps);
}

void BM_PermanentNaive(benchmark::State& state) {
  const fgi::Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(fgi::permanent_naive(m));
}
BENCHMARK(BM_PermanentNaive)->DenseRange(2, 7);

void BM_PermanentRyser(benchmark::State& state) {
  const fgi::Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(fgi::permanent_ryser(m));
}
BENCHMARK(BM_PermanentRyser)->DenseRange(2, 10);

void BM_ReversionTrees(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fgi::enumerate_reversion_trees(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ReversionTrees)->DenseRange(4, 10, 2);

void BM_LagrangeGoodTrees(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fgi::enumerate_lg_trees(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_LagrangeGoodTrees)->DenseRange(4, 12, 2);

void BM_RevertFixedPoint(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const fgi::SeriesSystem f = sample_system(2, d);
  for (auto _ : state) benchmark::DoNotOptimize(fgi::revert(f, d));
}
BENCHMARK(BM_RevertFixedPoint)->DenseRange(3, 7, 2);

void BM_RevertByTrees(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const fgi::SeriesSystem f = sample_system(2, d);
  for (auto _ : state) benchmark::DoNotOptimize(fgi::revert_by_trees(f, d));
}
BENCHMARK(BM_RevertByTrees)->DenseRange(3, 7, 2);

void BM_LagrangeGoodZ(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  std::vector<fgi::Series> comps;
  for (std::size_t i = 0; i < 2; ++i)
    comps.push_back(fgi::Series::constant(2, d, 1) + fgi::Series::variable(2, d, 1 - i) * fgi::Rational(1, 2));
  const fgi::SeriesSystem g(comps);
  for (auto _ : state) benchmark::DoNotOptimize(fgi::lg_partition_Z(g, d));
}
BENCHMARK(BM_LagrangeGoodZ)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
