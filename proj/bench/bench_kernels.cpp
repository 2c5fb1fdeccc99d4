#include "swm/region.hpp"
#include "swm/scenarios.hpp"
#include "swm/solver.hpp"

#include <benchmark/benchmark.h>

namespace {

swm::ScenarioConfig bench_scenario() {
    swm::ScenarioConfig cfg;
    cfg.n_cells = 1000;
    return cfg;
}

// One explicit step of the dam break; arg 0 = model index, arg 1 = order.
template <bool Parallel>
void BM_Step(benchmark::State& state) {
    const auto model = swm::kAllModels[static_cast<std::size_t>(state.range(0))];
    const int order = static_cast<int>(state.range(1));
    const swm::ScenarioConfig cfg = bench_scenario();
    const swm::SolverConfig sc = cfg.solver_config(model, order);
    const swm::CoefficientTensors tensors(order);
    const swm::Field1D initial = swm::dam_break_init(cfg, order);
    const double dt = swm::time_step(initial, sc, tensors);
    for (auto _ : state) {
        swm::Field1D f = initial;
        if constexpr (Parallel) swm::step(f, sc, tensors, dt);
        else swm::step_serial(f, sc, tensors, dt);
        benchmark::DoNotOptimize(f.data().data());
    }
    state.SetItemsProcessed(state.iterations() * cfg.n_cells);
}

template <bool Parallel>
void BM_RegionScan(benchmark::State& state) {
    const int res = static_cast<int>(state.range(0));
    const std::vector<swm::ScanAxis> axes{{1, -6.0, 6.0, res}, {2, -6.0, 6.0, res}};
    for (auto _ : state) {
        auto r = Parallel ? swm::scan_hyperbolicity_region(swm::ModelKind::MHSWME, 2, axes)
                          : swm::scan_hyperbolicity_region_serial(swm::ModelKind::MHSWME, 2, axes);
        benchmark::DoNotOptimize(r.status.data());
    }
    state.SetItemsProcessed(state.iterations() * res * res);
}

// SWME uses QR for wave speeds, PMHSWME the closed form.
void step_args(benchmark::internal::Benchmark* b) {
    for (int model : {0, 5})
        for (int order : {2, 4}) b->Args({model, order});
}

}  // namespace

BENCHMARK(BM_Step<false>)->Name("step/serial")->Apply(step_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Step<true>)->Name("step/parallel")->Apply(step_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionScan<false>)->Name("hypregion/serial")->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionScan<true>)->Name("hypregion/parallel")->Arg(101)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
