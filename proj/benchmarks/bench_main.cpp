#include <dfact/dynamics.hpp>
#include <dfact/factorization.hpp>
#include <dfact/multi_hermite.hpp>
#include <dfact/operator_algebra.hpp>

#include <benchmark/benchmark.h>

using namespace dfact;

static void BM_HermiteEvalDouble(benchmark::State& state) {
    const HermiteArgs<double> args(3, {0.7, -0.3, 0.2});
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hermite_eval(n, args));
}
BENCHMARK(BM_HermiteEvalDouble)->Arg(8)->Arg(32)->Arg(128);

static void BM_HermiteEvalRational(benchmark::State& state) {
    const HermiteArgs<Rational> args(3, {Rational(1, 3), Rational(-2, 5), Rational(1, 7)});
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hermite_eval(n, args));
}
BENCHMARK(BM_HermiteEvalRational)->Arg(8)->Arg(24);

static void BM_RelationSuite(benchmark::State& state) {
    const FockSpec spec{static_cast<int>(state.range(0)), 4};
    const auto rels = builtin_relations();
    for (auto _ : state)
        for (const auto& r : rels) benchmark::DoNotOptimize(check_relation(r, spec));
}
BENCHMARK(BM_RelationSuite)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_StrangStep(benchmark::State& state) {
    const auto grid = build_grid(0.5, 10.0, state.range(0), DerivativeScheme::spectral);
    const auto jc = generalized_jc_hamiltonian(PotentialSpec::parse("q^4"), grid);
    const SpectralPropagator outer(jc.outer), inner(jc.inner);
    Vector psi = Vector::Zero(2 * grid.size());
    for (Index i = 0; i < grid.size(); ++i) psi(i) = std::exp(-0.5 * (grid[i] - 4.0) * (grid[i] - 4.0));
    psi.normalize();
    for (auto _ : state) {
        psi = outer.apply(0.5e-3, inner.apply(1e-3, outer.apply(0.5e-3, psi)));
        benchmark::DoNotOptimize(psi.data());
    }
}
BENCHMARK(BM_StrangStep)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BM_PartnerResidual(benchmark::State& state) {
    const auto grid = build_grid(-6.0, 6.0, state.range(0), DerivativeScheme::spectral);
    const auto f = PotentialSpec::parse("q^2+1");
    for (auto _ : state) {
        const auto d = partner_decomposition(f, grid);
        benchmark::DoNotOptimize(d.identity_residual(grid));
    }
}
BENCHMARK(BM_PartnerResidual)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
