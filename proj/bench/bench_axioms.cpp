// Serial reference vs OpenMP path of check_axioms.

#include <benchmark/benchmark.h>

#include "aop/axioms.hpp"
#include "aop/braid.hpp"
#include "aop/operad.hpp"

namespace {

void run(benchmark::State& state, const aop::OperadPtr& inst, bool parallel) {
  aop::CheckConfig cfg;
  cfg.max_arity = static_cast<int>(state.range(0));
  cfg.parallel = parallel;
  std::size_t cases = 0;
  for (auto _ : state) {
    const auto rep = aop::check_axioms(*inst, cfg);
    cases = rep.cases();
    benchmark::DoNotOptimize(cases);
  }
  state.counters["cases"] = static_cast<double>(cases);
}

void BM_SymSerial(benchmark::State& s) { run(s, aop::make_symmetric(), false); }
void BM_SymParallel(benchmark::State& s) { run(s, aop::make_symmetric(), true); }
void BM_BraidSerial(benchmark::State& s) { run(s, aop::make_braid(), false); }
void BM_BraidParallel(benchmark::State& s) { run(s, aop::make_braid(), true); }

}  // namespace

BENCHMARK(BM_SymSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BraidSerial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BraidParallel)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
