#include <benchmark/benchmark.h>

#include "aos/catalog.hpp"

using namespace aos;

namespace {

void gram(benchmark::State& state, const char* id, GramMode mode, bool parallel) {
    const CaseInstance c = instantiate(id);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GramMatrix g = parallel ? build_gram(c.space, c.family, N, mode) : build_gram_serial(c.space, c.family, N, mode);
        benchmark::DoNotOptimize(g.a.data());
    }
    state.SetComplexityN(N);
}

}  // namespace

BENCHMARK_CAPTURE(gram, beta_numeric_serial, "beta-log", GramMode::numeric, false)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(gram, beta_numeric_omp, "beta-log", GramMode::numeric, true)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(gram, gamma_both_serial, "gamma-log", GramMode::both, false)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(gram, gamma_both_omp, "gamma-log", GramMode::both, true)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(gram, zetatail_closed_serial, "zetatail-one", GramMode::closed, false)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(gram, zetatail_closed_omp, "zetatail-one", GramMode::closed, true)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
