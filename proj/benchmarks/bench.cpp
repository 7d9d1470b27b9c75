#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "nliouville/closed_forms.hpp"
#include "nliouville/quantization.hpp"
#include "nliouville/radial_ode.hpp"

using namespace nliouville;

static void BM_SolveFromPeak(benchmark::State& state) {
    const auto dim = Dimension::of(static_cast<int>(state.range(0)));
    const double alpha0 = alpha0_from_gamma(8.0 * std::numbers::pi, dim);
    for (auto _ : state) {
        auto p = solve_from_peak(alpha0, dim);
        benchmark::DoNotOptimize(p.U.data());
    }
}
BENCHMARK(BM_SolveFromPeak)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MassEquationRoot(benchmark::State& state) {
    const auto dim = Dimension::of(static_cast<int>(state.range(0)));
    double g = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mass_equation_root(g, dim));
        g = std::fmod(g + 0.7, 50.0);
    }
}
BENCHMARK(BM_MassEquationRoot)->Arg(2)->Arg(5);

static void BM_PicardLocalSolve(benchmark::State& state) {
    const auto dim = Dimension::of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto res = picard_local_solve(1.0, 0.5, -1.0, dim, 40);
        benchmark::DoNotOptimize(res.U.data());
    }
}
BENCHMARK(BM_PicardLocalSolve)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_FamilyTotalMass(benchmark::State& state) {
    const auto f =
        ClosedFormFamily::singular_radial(static_cast<int>(state.range(0)),
                                          1.5, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(family_total_mass(f));
    }
}
BENCHMARK(BM_FamilyTotalMass)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SampleProfile(benchmark::State& state) {
    const auto f = ClosedFormFamily::entire(2, 1.0);
    for (auto _ : state) {
        auto p = sample_profile(f, 1e-6, 1e6, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(p.mass_cum.data());
    }
}
BENCHMARK(BM_SampleProfile)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
