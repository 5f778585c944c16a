// Microbenchmarks for the hot paths: closed forms, quadrature routes,
// Monte Carlo estimators, and the discretized prospect pipeline.

#include <benchmark/benchmark.h>

#include "ptgauss/equilibrium.hpp"
#include "ptgauss/prospect.hpp"
#include "ptgauss/quadrature.hpp"
#include "ptgauss/sweep.hpp"

namespace {

using namespace ptgauss;

const ValueFunction kSq = ValueFunction::squared_error();
const SourceModel kSrc(1.0);
const ChannelModel kCh(1.0);
const LinearEncoder kEnc{0.0, 1.0};
const LinearDecoder kDec{0.5, 0.0};

void ClosedFormDistortion(benchmark::State& state) {
    const AgentProfile agent(0.5, kSq);
    for (auto _ : state) {
        benchmark::DoNotOptimize(distortion_closed(kSrc, kCh, kEnc, kDec, 0.5));
        benchmark::DoNotOptimize(distortion_closed_best_response(kSrc, kCh, 1.0, agent));
    }
}
BENCHMARK(ClosedFormDistortion);

void StackelbergSolve(benchmark::State& state) {
    const GameSpec game{kSrc, kCh, PowerBudget(1.0), AgentProfile(0.5, kSq), AgentProfile(0.25, kSq)};
    for (auto _ : state) benchmark::DoNotOptimize(stackelberg_solve(game));
}
BENCHMARK(StackelbergSolve);

void HermiteRule(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite(n));
}
BENCHMARK(HermiteRule)->Arg(16)->Arg(96);

void DistortionQuadrature(benchmark::State& state) {
    const AgentProfile agent(0.5, kSq);
    const QuadratureSpec quad(static_cast<int>(state.range(0)), 10.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(distortion_quadrature(kSrc, kCh, kEnc, kDec, agent, quad));
}
BENCHMARK(DistortionQuadrature)->Arg(32)->Arg(96);

void DistortedExpectationQuadrature(benchmark::State& state) {
    const AgentProfile agent(0.5, kSq);
    const QuadratureSpec quad(static_cast<int>(state.range(0)), 10.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(distortion_distorted_expectation(kSrc, kCh, kEnc, kDec, agent, quad));
}
BENCHMARK(DistortedExpectationQuadrature)->Arg(32)->Arg(96);

void McDirect(benchmark::State& state) {
    const AgentProfile agent(0.5, kSq);
    const McConfig cfg(static_cast<size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(mc_distortion(kSrc, kCh, kEnc, kDec, agent, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(McDirect)->Arg(10000)->Arg(100000);

void McImportance(benchmark::State& state) {
    const AgentProfile agent(0.5, kSq);
    const McConfig cfg(static_cast<size_t>(state.range(0)), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_distortion_importance(kSrc, kCh, kEnc, kDec, agent, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(McImportance)->Arg(10000)->Arg(100000);

void DiscretizedProspect(benchmark::State& state) {
    const GaussianDensity unit(0.0, 1.0);
    const WeightFunction w = WeightFunction::karmarkar_power(0.5);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const DiscreteProspect p = discretize(unit, n, 10.0);
        benchmark::DoNotOptimize(discrete_pt_karmarkar(p, kSq, w));
    }
}
BENCHMARK(DiscretizedProspect)->Arg(256)->Arg(1024);

void ClosedFormSweep(benchmark::State& state) {
    SweepConfig cfg;
    cfg.mc_enabled = false;
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg));
}
BENCHMARK(ClosedFormSweep);

} // namespace

BENCHMARK_MAIN();
