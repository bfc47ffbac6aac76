#include <benchmark/benchmark.h>

#include <random>

#include "kcert/kernels.hpp"
#include "kcert/sampler.hpp"

using namespace kcert;

namespace {

MultiPoly dense_poly(std::uint64_t seed, int degree) {
  const Variables vars{"alpha", "beta", "gamma"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-100000, 100000);
  MultiPoly p(vars);
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) {
      for (int c = 0; a + b + c <= degree; ++c) p.add_term(Monomial{unsigned(a), unsigned(b), unsigned(c)}, Rational(coeff(rng), 7));
    }
  }
  return p;
}

std::vector<std::vector<Rational>> points(int n) {
  Sampler s(kDefaultSeed);
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < n; ++i) out.push_back(s.k3_point());
  return out;
}

void BM_multiply_serial(benchmark::State& state) {
  const MultiPoly a = dense_poly(1, state.range(0));
  const MultiPoly b = dense_poly(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(a, b));
  state.counters["terms"] = static_cast<double>(a.size() * b.size());
}

void BM_multiply_parallel(benchmark::State& state) {
  const MultiPoly a = dense_poly(1, state.range(0));
  const MultiPoly b = dense_poly(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_parallel(a, b));
  state.counters["terms"] = static_cast<double>(a.size() * b.size());
  state.counters["threads"] = kernels::max_threads();
}

void BM_evaluate_serial(benchmark::State& state) {
  const MultiPoly p = dense_poly(3, 12);
  const auto xs = points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_batch_serial(p, xs));
}

void BM_evaluate_parallel(benchmark::State& state) {
  const MultiPoly p = dense_poly(3, 12);
  const auto xs = points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_batch_parallel(p, xs));
  state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(BM_multiply_serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_parallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_evaluate_serial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_evaluate_parallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
