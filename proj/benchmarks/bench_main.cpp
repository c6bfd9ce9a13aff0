#include <benchmark/benchmark.h>

#include <cmath>

#include "abfield/abfield.hpp"

using namespace abfield;

namespace {

SolenoidSpec standard() {
    SolenoidSpec s;
    s.radius = 0.01;
    s.turns_per_length = 1e4;
    s.current = 1.0;
    return s;
}

void BM_LoopIntegral(benchmark::State& state) {
    const VectorField a = analytic_longitudinal_field(standard());
    const ParametricLoop loop =
        make_circle_loop(Point3{}, 0.05, {0.0, 0.0, 1.0}, 1, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(loop_integral(a, loop).value);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LoopIntegral)->RangeMultiplier(4)->Range(16, 1024);

void BM_SheetQuadrature(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SurfaceCurrent src = surface_current_samples(standard(), n, n, 0.2);
    const Point3 x(0.02, 0.0, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(longitudinal_from_current(src, x));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SheetQuadrature)->RangeMultiplier(2)->Range(64, 512);

void BM_HelmholtzProject(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GridField grid = GridField::sample(n, 1.0, [](const Point3& p) {
        const double k = 2.0 * constants::pi;
        return Vec3{std::sin(k * p.y()), std::cos(k * p.z()), std::sin(k * p.x())};
    });
    for (auto _ : state) benchmark::DoNotOptimize(helmholtz_project(grid).longitudinal_part.max_abs());
}
BENCHMARK(BM_HelmholtzProject)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_Trajectory(benchmark::State& state) {
    const SolenoidSpec spec = standard();
    const ParticleState e{0.0, Point3(0.05, 0.0, 0.0), {0.0, 1e6, 0.0}, constants::electron_mass,
                          constants::electron_charge};
    const double orbit = 2.0 * constants::pi * 0.05 / 1e6;
    const RampSchedule ramp = RampSchedule::smoothstep(1.0, 10.0 * orbit);
    TrajectoryOptions opt;
    opt.t_end = 10.0 * orbit;
    opt.dt = opt.t_end / static_cast<double>(state.range(0));
    opt.record_every = 1000;
    opt.model = state.range(1) ? ForceModel::total_derivative : ForceModel::lorentz;
    for (auto _ : state) benchmark::DoNotOptimize(integrate_trajectory(e, spec, ramp, opt).max_relative_drift);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Trajectory)->Args({10000, 0})->Args({10000, 1})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
