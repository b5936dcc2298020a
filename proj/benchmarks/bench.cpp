#include <benchmark/benchmark.h>

#include "covfix/dre.hpp"
#include "covfix/fixing.hpp"
#include "covfix/greedy.hpp"
#include "covfix/pipeline.hpp"
#include "covfix/simplex.hpp"
#include "covfix/sls.hpp"

using namespace covfix;

namespace {

ScpInstance make_instance(int n, std::uint64_t seed) {
  SlsParams params;
  params.n = n;
  params.seed = seed;
  return generate(params).instance;
}

void BM_Generate(benchmark::State& state) {
  SlsParams params;
  params.n = static_cast<int>(state.range(0));
  params.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(params).instance.n_rows);
  }
}
BENCHMARK(BM_Generate)->Arg(200)->Arg(500)->Arg(1000);

void BM_SimplexSolve(benchmark::State& state) {
  ScpInstance inst = make_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    SolveResult res = solve(inst, SolverConfig{});
    benchmark::DoNotOptimize(res.final.zeta);
  }
  state.counters["rows"] = inst.n_rows;
}
BENCHMARK(BM_SimplexSolve)->Arg(200)->Arg(500)->Arg(1000);

void BM_DreFixpoint(benchmark::State& state) {
  ScpInstance inst = make_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dre_fixpoint(inst).instance.n_rows);
  }
}
BENCHMARK(BM_DreFixpoint)->Arg(200)->Arg(500)->Arg(1000);

void BM_DpfPipeline(benchmark::State& state) {
  ScpInstance inst = make_instance(static_cast<int>(state.range(0)), 1);
  const double ub = greedy_ub(inst).value;
  for (auto _ : state) {
    ProcedureResult res = run_procedure(inst, ub, Procedure::DpfDre, SolverConfig{});
    benchmark::DoNotOptimize(res.n_final);
  }
}
BENCHMARK(BM_DpfPipeline)->Arg(200)->Arg(500)->Arg(1000);

void BM_StrongFix(benchmark::State& state) {
  ScpInstance inst = make_instance(static_cast<int>(state.range(0)), 1);
  const double ub = greedy_ub(inst).value;
  for (auto _ : state) {
    ProcedureResult res = run_procedure(inst, ub, Procedure::SfDre, SolverConfig{});
    benchmark::DoNotOptimize(res.n_final);
  }
}
BENCHMARK(BM_StrongFix)->Arg(200)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
