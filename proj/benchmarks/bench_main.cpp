#include <benchmark/benchmark.h>

#include "mtensor/mtensor.hpp"

using namespace mtensor;

namespace {

void BM_MProduct(benchmark::State& state) {
    const Index n = state.range(0), p = state.range(1);
    CounterRng rng(1);
    const Transform t = random_transform(p, rng);
    const Tensor3 a = random_real_tensor(n, n, p, rng), b = random_real_tensor(n, n, p, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m_product(a, b, t));
}
BENCHMARK(BM_MProduct)->ArgsProduct({{8, 32, 128}, {3, 8}});

void BM_AorTspi(benchmark::State& state) {
    const Index n = state.range(0);
    const auto preset = static_cast<AorPreset>(state.range(1));
    CounterRng rng(2);
    const Transform t = random_transform(3, rng);
    const Tensor3 a = random_hat_sdd_tensor(n, t, rng), b = random_hat_sdd_tensor(n, t, rng);
    const Tensor3 c = random_real_tensor(n, n, 3, rng, 0.0, 1.0);
    SolverConfig cfg;
    cfg.alpha = cfg.beta = 0.9;
    cfg.tol = 1e-10;
    if (preset_fixes_steps(preset)) cfg.alpha = cfg.beta = 1.0;
    int iters = 0;
    for (auto _ : state) {
        const SolveReport r = aor_tspi_solve(a, b, c, t, preset_setup(preset), cfg);
        iters = r.iterations;
        benchmark::DoNotOptimize(r.x);
    }
    state.counters["iterations"] = iters;
    state.SetLabel(std::string(to_string(preset)));
}
BENCHMARK(BM_AorTspi)
    ->ArgsProduct({{10, 20, 40},
                   {static_cast<long>(AorPreset::hoj_tspi), static_cast<long>(AorPreset::hogs_tspi)}})
    ->Unit(benchmark::kMillisecond);

void BM_DirectSolve(benchmark::State& state) {
    const Index n = state.range(0);
    CounterRng rng(3);
    const Transform t = random_transform(3, rng);
    const Tensor3 a = random_hat_sdd_tensor(n, t, rng), b = random_hat_sdd_tensor(n, t, rng);
    const Tensor3 c = random_real_tensor(n, n, 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(direct_solve(a, b, c, t));
}
BENCHMARK(BM_DirectSolve)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Tikhonov(benchmark::State& state) {
    const Index n = state.range(0);
    const Transform t = Transform::identity(3);
    BlurModel model;
    model.size = n;
    const BlurPair op = build_blur_pair(model, n, BlurMode::one_sided, t);
    const Tensor3 c = synthesize_observation(synthetic_image(n), op.a, op.b, t, 1e-3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(tikhonov_solve(op.a, op.b, c, {1e-2, 1e-2}, t));
}
BENCHMARK(BM_Tikhonov)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
