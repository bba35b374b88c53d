// Serial reference against the OpenMP kernels. Argument 0 runs serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "smashcalc/frt.hpp"
#include "smashcalc/parallel.hpp"
#include "smashcalc/scenario.hpp"
#include "smashcalc/smash.hpp"

using namespace smashcalc;

namespace {

const std::string kRoot = SMASHCALC_SOURCE_DIR;

void select(benchmark::State& state)
{
    set_default_exec(state.range(0) ? Exec::Parallel : Exec::Serial);
    state.SetLabel(state.range(0) ? "parallel x" + std::to_string(worker_count()) : "serial");
}

void suite(benchmark::State& state, const std::string& scenario, const std::string& name)
{
    select(state);
    RunOptions o;
    o.suites = std::vector<std::string>{name};
    for (auto _ : state) {
        ScenarioResult r = run_scenario(kRoot + "/scenarios/" + scenario + ".json", o);
        if (r.exit_code != kExitPass)
            state.SkipWithError(r.error.c_str());
        benchmark::DoNotOptimize(r);
    }
}

void BM_smash_associativity_plane(benchmark::State& state)
{
    select(state);
    FrtSetup s = build_frt(standard_frt_input());
    for (auto _ : state)
        benchmark::DoNotOptimize(check_smash(*s.smash, 3));
}

void BM_frt_checks(benchmark::State& state)
{
    select(state);
    FrtSetup s = build_frt(standard_frt_input());
    for (auto _ : state)
        benchmark::DoNotOptimize(check_frt(s));
}

}  // namespace

BENCHMARK_CAPTURE(suite, h4_smash, std::string("h4_universal"), std::string("smash"))->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, h4_smash_calculus, std::string("h4_universal"), std::string("smash_calculus"))
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, h4_exactness, std::string("h4_universal"), std::string("exactness"))->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(suite, h4_connections, std::string("h4_universal"), std::string("connections"))
    ->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_smash_associativity_plane)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_frt_checks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
