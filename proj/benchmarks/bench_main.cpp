// Microbenchmarks for the hot paths: coefficient evaluation, quadrature
// kernels, shooting, the conformal DtN oracle, and FEM assembly/solve.

#include <benchmark/benchmark.h>

#include "annspec/oracle2d.hpp"
#include "annspec/quadgeom.hpp"
#include "annspec/radial.hpp"
#include "annspec/spaces.hpp"
#include "annspec/specfun.hpp"

using namespace annspec;

namespace {

void BM_SeriesCoefficientFiniteSum(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::series_coefficient(
            specfun::CoeffFamily::Alpha, k, 8, specfun::CoeffMethod::FiniteSum));
}
BENCHMARK(BM_SeriesCoefficientFiniteSum)->Arg(2)->Arg(5);

void BM_GaussLegendreConstruction(benchmark::State& state) {
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(quadgeom::gauss_legendre(order));
}
BENCHMARK(BM_GaussLegendreConstruction)->Arg(16)->Arg(64)->Arg(256);

void BM_OffsetKernelIntegral(benchmark::State& state) {
    auto rule = quadgeom::gauss_legendre(64);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            quadgeom::offset_kernel_integral(1.5, 2.5, 2.0, 0.6, rule));
}
BENCHMARK(BM_OffsetKernelIntegral);

void BM_SteklovShoot(benchmark::State& state) {
    const std::size_t steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            radial::steklov_concentric_shoot(3, 1.0, 2.0, 2, steps));
}
BENCHMARK(BM_SteklovShoot)->Arg(512)->Arg(4096);

void BM_NeumannRadialMu1(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            radial::neumann_radial_mu1(SpaceKind::euclidean(3), {1.0, 2.0})
                .eigenvalue);
}
BENCHMARK(BM_NeumannRadialMu1);

void BM_DtnEccentricTau1(benchmark::State& state) {
    const std::size_t modes = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            oracle2d::steklov_eccentric_tau1(1.0, 2.0, 0.5, modes));
}
BENCHMARK(BM_DtnEccentricTau1)->Arg(32)->Arg(64);

void BM_FemAssembly(benchmark::State& state) {
    const std::size_t n_r = static_cast<std::size_t>(state.range(0));
    auto mesh = oracle2d::build_transfinite_mesh(
        1.0, [](double) { return 2.0; }, n_r, 2 * n_r);
    for (auto _ : state) benchmark::DoNotOptimize(oracle2d::assemble_p1(mesh));
}
BENCHMARK(BM_FemAssembly)->Arg(24)->Arg(48);

void BM_FemNeumannMu1(benchmark::State& state) {
    auto mesh = oracle2d::build_transfinite_mesh(
        1.0, [](double) { return 2.0; }, 24, 48);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle2d::fem_neumann_mu1(mesh));
}
BENCHMARK(BM_FemNeumannMu1);

} // namespace

BENCHMARK_MAIN();
