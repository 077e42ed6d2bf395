#include <benchmark/benchmark.h>

#include "gcsim/engine.hpp"
#include "gcsim/genetics.hpp"
#include "gcsim/memetics.hpp"

using namespace gcsim;

namespace {

SiteNetwork bench_network() {
    Rng rng(1);
    return SiteNetwork::generate(50, 0.25, {25, 75}, rng);
}

void BM_Evaluate(benchmark::State& state) {
    const SiteNetwork net = bench_network();
    const EconomyParams econ;
    Rng rng(2);
    const Genome g = random_genome(net, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(g.genes, net, econ));
}
BENCHMARK(BM_Evaluate)->Arg(20)->Arg(200);

void BM_Develop(benchmark::State& state) {
    const SiteNetwork net = bench_network();
    const EconomyParams econ;
    Rng rng(3);
    const Genome g = random_genome(net, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(develop(g, 20, net, econ));
}
BENCHMARK(BM_Develop)->Arg(200)->Arg(1000);

void BM_StepDay(benchmark::State& state) {
    WorldParams p;
    p.mode = static_cast<Mode>(state.range(0));
    World w(p, 4);
    for (int d = 0; d < 100 && !w.collapsed(); ++d) w.step_day();
    for (auto _ : state) {
        if (w.collapsed()) {
            state.SkipWithError("population collapsed");
            break;
        }
        w.step_day();
    }
    state.counters["population"] = static_cast<double>(w.population());
}
BENCHMARK(BM_StepDay)->Arg(static_cast<int>(Mode::breeders))->Arg(static_cast<int>(Mode::socializers));

}  // namespace

BENCHMARK_MAIN();
