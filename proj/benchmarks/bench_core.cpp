#include <benchmark/benchmark.h>

#include <random>

#include "ckron/ckron.hpp"

namespace {

using namespace ckron;

const Tolerances tol;

CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = dist(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cdouble{dist(rng), dist(rng)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void BM_Kron(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t n = state.range(0);
  const CMatrix a = random_hermitian(n, rng);
  const CMatrix b = random_hermitian(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Kron)->RangeMultiplier(2)->Range(2, 16)->Complexity();

void BM_HermitianEig(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const CMatrix a = random_hermitian(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(a, tol));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_Cayley(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const CMatrix a = random_hermitian(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley(a, tol));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Cayley)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_GMap(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const std::size_t n = state.range(0);
  CMatrix a = random_hermitian(n, rng);
  CMatrix b = random_hermitian(n, rng);
  while (!in_domain(a, b, tol).in_domain) {
    a = random_hermitian(n, rng);
    b = random_hermitian(n, rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_map(a, b, tol));
  }
}
BENCHMARK(BM_GMap)->DenseRange(2, 6, 2);

void BM_KronFactorize(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const std::size_t n = state.range(0);
  const CMatrix u = cayley(kron(2.5 * CMatrix::identity(n), random_hermitian(n, rng)), tol);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron_factorize(u, n, n, tol));
  }
}
BENCHMARK(BM_KronFactorize)->DenseRange(2, 8, 2);

void BM_CheckKronIdentity(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const std::size_t n = state.range(0);
  const CMatrix a = random_hermitian(n, rng);
  const CMatrix b = random_hermitian(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_kron_identity(a, b, tol));
  }
}
BENCHMARK(BM_CheckKronIdentity)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
