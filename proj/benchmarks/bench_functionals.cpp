#include <benchmark/benchmark.h>

#include "qcomm/functionals.hpp"
#include "qcomm/random_matrices.hpp"
#include "qcomm/verifier.hpp"

using namespace qcomm;

namespace {

std::pair<ComplexMatrix, ComplexMatrix> fixed_pair(Eigen::Index n) {
  Rng rng(derive_seed(2024, static_cast<std::uint64_t>(n)));
  ComplexMatrix a = random_ginibre(n, rng);
  ComplexMatrix b = random_ginibre(n, rng);
  return {std::move(a), std::move(b)};
}

void bm_f_function(benchmark::State& state) {
  const auto [a, b] = fixed_pair(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_function(a, b, 0.75));
  }
}

void bm_f_trace_form(benchmark::State& state) {
  const auto [a, b] = fixed_pair(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f_function_trace_form(a, b, 0.75));
  }
}

void bm_r_function(benchmark::State& state) {
  const auto [a, b] = fixed_pair(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_function(a, b));
  }
}

void bm_check_decomposition(benchmark::State& state) {
  const auto [a, b] = fixed_pair(state.range(0));
  const QParams p = bound_c(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_decomposition(a, b, p));
  }
}

}  // namespace

BENCHMARK(bm_f_function)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_f_trace_form)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_r_function)->Arg(8)->Arg(16);
BENCHMARK(bm_check_decomposition)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
