#include "rotvac/angular_reduction.hpp"
#include "rotvac/em_correlations.hpp"
#include "rotvac/monte_carlo.hpp"
#include "rotvac/oracles.hpp"
#include "rotvac/scalar_correlations.hpp"
#include "rotvac/spectral_regularization.hpp"

#include <benchmark/benchmark.h>

using namespace rotvac;

namespace {

const auto kin = RotationKinematics::make(1.0, 0.5);

void BM_ReduceAngular(benchmark::State& state)
{
    const auto c = cf_integrand_coefficients(CFComponentSpec::parse("E1E1"), 1.1, kin);
    double k = -0.4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_angular(c.brace, k));
    }
}
BENCHMARK(BM_ReduceAngular);

void BM_ContinuousCF(benchmark::State& state)
{
    const auto spec = CFComponentSpec::parse("E3E3");
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf_continuous(spec, 0.0, 1.0, kin).value);
    }
}
BENCHMARK(BM_ContinuousCF);

void BM_ThermalN3(benchmark::State& state)
{
    double F = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermal_n3(F));
        F = F < 6.0 ? F + 0.01 : 0.1;
    }
}
BENCHMARK(BM_ThermalN3);

void BM_DiscreteCF(benchmark::State& state)
{
    const auto spec = CFComponentSpec::parse("E1E1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf_discrete(spec, 0.0, 0.25, kin).total.value);
    }
}
BENCHMARK(BM_DiscreteCF)->Unit(benchmark::kMillisecond);

void BM_ScalarDiscreteCF(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(scalar_cf_discrete(0.0, 1.3, kin).total.value);
    }
}
BENCHMARK(BM_ScalarDiscreteCF)->Unit(benchmark::kMillisecond);

void BM_RegulatedOracle(benchmark::State& state)
{
    const auto spec = CFComponentSpec::parse("E1E1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(regulated_cf_quadrature(spec, 0.0, 1.0, kin).value);
    }
}
BENCHMARK(BM_RegulatedOracle)->Unit(benchmark::kMillisecond);

void BM_AbelSeries(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(abel_summed_series(3, 1.3).value);
    }
}
BENCHMARK(BM_AbelSeries)->Unit(benchmark::kMicrosecond);

void BM_MonteCarlo(benchmark::State& state)
{
    McFieldSpec mc;
    mc.n_max = static_cast<int>(state.range(0));
    mc.ensembles = 200;
    const auto spec = CFComponentSpec::parse("E1E1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_zero_point_cf(spec, 0.0, 0.01, kin, mc).value);
    }
    state.SetItemsProcessed(state.iterations() * mc.ensembles);
}
BENCHMARK(BM_MonteCarlo)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
