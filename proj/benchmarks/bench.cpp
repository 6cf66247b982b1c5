#include <benchmark/benchmark.h>

#include "sinrc/generators.hpp"
#include "sinrc/scheduler.hpp"

namespace {

using namespace sinrc;

LinkInstance make_instance(int n) {
    return random_planar(n, 1024.0, 42).instance;
}

void BM_ConflictBuild(benchmark::State& state) {
    const LinkInstance inst = make_instance(static_cast<int>(state.range(0)));
    const SublinearFn f = SublinearFn::tlog(1.0, inst.sinr().alpha, 2.0);
    for (auto _ : state) {
        ConflictGraph g(inst, f);
        benchmark::DoNotOptimize(g.edge_count());
    }
}
BENCHMARK(BM_ConflictBuild)->Arg(100)->Arg(400)->Arg(1600);

void BM_GreedyColor(benchmark::State& state) {
    const LinkInstance inst = make_instance(static_cast<int>(state.range(0)));
    const ConflictGraph g(inst, SublinearFn::tlog(1.0, inst.sinr().alpha, 2.0));
    for (auto _ : state) {
        Coloring c = greedy_color(g);
        benchmark::DoNotOptimize(c.colors_used);
    }
}
BENCHMARK(BM_GreedyColor)->Arg(100)->Arg(400)->Arg(1600);

void BM_ExactFeasible(benchmark::State& state) {
    const LinkInstance inst = make_instance(static_cast<int>(state.range(0)));
    std::vector<int> all(inst.size());
    for (int i = 0; i < inst.size(); ++i) all[i] = i;
    for (auto _ : state) {
        FeasibilityVerdict v = exact_feasible(inst, all);
        benchmark::DoNotOptimize(v.kind);
    }
}
BENCHMARK(BM_ExactFeasible)->Arg(20)->Arg(50)->Arg(100);

void BM_Schedule(benchmark::State& state) {
    const LinkInstance inst = make_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Schedule s = schedule(inst, 1.0, true);
        benchmark::DoNotOptimize(s.slots.size());
    }
}
BENCHMARK(BM_Schedule)->Arg(50)->Arg(200);

} // namespace

BENCHMARK_MAIN();
