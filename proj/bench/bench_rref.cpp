#include <benchmark/benchmark.h>

#include <random>

#include "strathom/linalg/rref.hpp"

using strathom::linalg::Field;
using strathom::linalg::Matrix;
using strathom::linalg::Scalar;

namespace {

Matrix random_matrix(const Field& f, std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> d(-9, 9);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(f, d(rng));
  }
  return m;
}

template <auto Kernel>
void run(benchmark::State& state, const Field& f) {
  const Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m));
}

void BM_rref_serial_Fp(benchmark::State& s) { run<strathom::linalg::rref_serial>(s, Field::prime(32003)); }
void BM_rref_parallel_Fp(benchmark::State& s) { run<strathom::linalg::rref>(s, Field::prime(32003)); }
void BM_rref_serial_Q(benchmark::State& s) { run<strathom::linalg::rref_serial>(s, Field::rationals()); }
void BM_rref_parallel_Q(benchmark::State& s) { run<strathom::linalg::rref>(s, Field::rationals()); }

}  // namespace

BENCHMARK(BM_rref_serial_Fp)->Arg(32)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_parallel_Fp)->Arg(32)->Arg(96)->Arg(192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_serial_Q)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_parallel_Q)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
