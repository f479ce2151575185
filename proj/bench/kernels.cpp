// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "hsfact/clifford.hpp"
#include "hsfact/diffop.hpp"
#include "hsfact/linalg.hpp"
#include "hsfact/polyspace.hpp"

using namespace hsfact;
using linalg::Matrix;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, int density_percent, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> value(-5, 5);
  std::uniform_int_distribution<int> pct(0, 99);
  Matrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (pct(rng) < density_percent) a(r, c) = GaussianRational(Rational(value(rng)), Rational(value(rng) % 2));
  return a;
}

void BM_multiply_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, n, 20, 1);
  const auto b = random_matrix(n, n, 20, 2);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::multiply(a, b));
}

void BM_multiply_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, n, 20, 1);
  const auto b = random_matrix(n, n, 20, 2);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::serial::multiply(a, b));
}

void BM_row_reduce_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 2 * n, 10, 3);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::row_reduce(a));
}

void BM_row_reduce_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 2 * n, 10, 3);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::serial::row_reduce(a));
}

struct DiracSetup {
  std::vector<SpinorPoly> domain;
  Coordinatizer codomain;
  explicit DiracSetup(int h)
      : domain(homogeneous_basis(5, 1, {h, 1})), codomain(homogeneous_basis(5, 1, {h - 1, 1})) {}
};

void BM_operator_matrix_parallel(benchmark::State& state) {
  const DiracSetup s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(operator_matrix(OperatorSpec::dirac(0), s.domain, s.codomain));
}

void BM_operator_matrix_serial(benchmark::State& state) {
  const DiracSetup s(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::operator_matrix(OperatorSpec::dirac(0), s.domain, s.codomain));
}

DiffOp dirac_squared(int m) {
  const auto d = DiffOp::first_order(m, cached_gamma_rep(m).generators);
  return d * d;
}

void BM_materialize_parallel(benchmark::State& state) {
  const auto op = dirac_squared(5);
  for (auto _ : state) benchmark::DoNotOptimize(materialize(op, static_cast<int>(state.range(0))));
}

void BM_materialize_serial(benchmark::State& state) {
  const auto op = dirac_squared(5);
  for (auto _ : state) benchmark::DoNotOptimize(serial::materialize(op, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_multiply_parallel)->Arg(32)->Arg(64);
BENCHMARK(BM_multiply_serial)->Arg(32)->Arg(64);
BENCHMARK(BM_row_reduce_parallel)->Arg(32)->Arg(64);
BENCHMARK(BM_row_reduce_serial)->Arg(32)->Arg(64);
BENCHMARK(BM_operator_matrix_parallel)->Arg(2)->Arg(3);
BENCHMARK(BM_operator_matrix_serial)->Arg(2)->Arg(3);
BENCHMARK(BM_materialize_parallel)->Arg(3)->Arg(4);
BENCHMARK(BM_materialize_serial)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
