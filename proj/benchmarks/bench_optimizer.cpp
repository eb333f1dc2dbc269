#include <benchmark/benchmark.h>

#include "qcomm/matrix_ops.hpp"
#include "qcomm/optimizer.hpp"
#include "qcomm/random_matrices.hpp"

using namespace qcomm;

namespace {

void bm_lift_form_in_a(benchmark::State& state) {
  Rng rng(derive_seed(40, static_cast<std::uint64_t>(state.range(0))));
  const ComplexMatrix b = random_ginibre(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift_form_in_A(b, 0.5));
  }
}

void bm_lift_and_top_eig(benchmark::State& state) {
  Rng rng(derive_seed(41, static_cast<std::uint64_t>(state.range(0))));
  const ComplexMatrix b = random_ginibre(state.range(0), rng);
  for (auto _ : state) {
    const HermitianForm h = lift_form_in_A(b, 0.5);
    benchmark::DoNotOptimize(top_eigpair(h));
  }
}

void bm_optimize_cell(benchmark::State& state) {
  OptimizeConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.q = 0.5;
  cfg.restarts = 4;
  cfg.seed = 99;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_cell(cfg));
  }
}

}  // namespace

BENCHMARK(bm_lift_form_in_a)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(bm_lift_and_top_eig)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(bm_optimize_cell)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
