// Serial vs OpenMP kernels. Same inputs for both, seeded.

#include <benchmark/benchmark.h>

#include <random>

#include "cherednik/dunkl.hpp"
#include "cherednik/kernels.hpp"
#include "cherednik/linalg.hpp"

using namespace cherednik;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const long num = static_cast<long>(rng() % 19) - 9;
      const long den = 1 + static_cast<long>(rng() % 7);
      m(i, j) = Scalar(Rational(num, den));
    }
  return m;
}

// S_4 with k = 3/4.
const DunklSystem& system() {
  static const DunklSystem sys(ReflectionGroup(1, 4), ParameterFunction::type_a(Scalar(Rational(3, 4))));
  return sys;
}

template <class F>
void bareiss(benchmark::State& state, F forward) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix base = random_matrix(n, n, 7);
  for (auto _ : state) {
    Matrix m = base;
    benchmark::DoNotOptimize(forward(m));
  }
}

template <class F>
void dunkl(benchmark::State& state, F build) {
  const auto d = static_cast<unsigned>(state.range(0));
  const auto y = coordinate_directions(4)[0];
  for (auto _ : state) benchmark::DoNotOptimize(build(system(), y, d));
}

template <class F>
void gram(benchmark::State& state, F step) {
  const auto d = static_cast<unsigned>(state.range(0));
  const auto dirs = coordinate_directions(4);
  Matrix prev = Matrix::identity(1);
  for (unsigned e = 1; e < d; ++e) {
    std::vector<Matrix> ds;
    for (const auto& y : dirs) ds.push_back(kernels::serial::dunkl_matrix(system(), y, e));
    prev = kernels::serial::gram_step(prev, ds, e);
  }
  std::vector<Matrix> ds;
  for (const auto& y : dirs) ds.push_back(kernels::serial::dunkl_matrix(system(), y, d));
  for (auto _ : state) benchmark::DoNotOptimize(step(prev, ds, d));
}

void BM_bareiss_serial(benchmark::State& s) { bareiss(s, [](Matrix& m) { return kernels::serial::bareiss_forward(m); }); }
void BM_bareiss_parallel(benchmark::State& s) { bareiss(s, [](Matrix& m) { return kernels::parallel::bareiss_forward(m); }); }
void BM_dunkl_serial(benchmark::State& s) { dunkl(s, kernels::serial::dunkl_matrix); }
void BM_dunkl_parallel(benchmark::State& s) { dunkl(s, kernels::parallel::dunkl_matrix); }
void BM_gram_serial(benchmark::State& s) { gram(s, kernels::serial::gram_step); }
void BM_gram_parallel(benchmark::State& s) { gram(s, kernels::parallel::gram_step); }

}  // namespace

BENCHMARK(BM_bareiss_serial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bareiss_parallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dunkl_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dunkl_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
