#include <benchmark/benchmark.h>

#include "belitskii/batch.hpp"
#include "belitskii/catalog.hpp"
#include "belitskii/sampling.hpp"

using namespace belitskii;

namespace {

std::vector<SystemTriple> workload(size_t count, size_t max_total) {
    std::vector<SystemTriple> out;
    for (size_t k = 0; k < count; ++k) {
        Rng rng = make_rng(99, k);
        out.push_back(random_system(rng, random_dims(rng, 2, max_total, 1)));
    }
    return out;
}

void BM_Canonicalize(benchmark::State& state, Execution mode) {
    const auto inputs = workload(static_cast<size_t>(state.range(0)), 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonicalize_batch(inputs, mode));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyCatalog(benchmark::State& state, Execution mode) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_catalog(static_cast<size_t>(state.range(0)), 7, mode));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK_CAPTURE(BM_Canonicalize, serial, Execution::Serial)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Canonicalize, parallel, Execution::Parallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_VerifyCatalog, serial, Execution::Serial)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_VerifyCatalog, parallel, Execution::Parallel)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
