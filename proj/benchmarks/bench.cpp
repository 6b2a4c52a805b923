#include "sheito/bphz/coproduct.hpp"
#include "sheito/bphz/renormalisation.hpp"
#include "sheito/model/probes.hpp"
#include "sheito/spde/rng.hpp"
#include "sheito/spde/solvers.hpp"
#include "sheito/structure/basis.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace sheito;

static void BM_PhiloxNormals(benchmark::State& state)
{
    const Philox4x32 g(7);
    std::uint32_t n = 0;
    for (auto _ : state) benchmark::DoNotOptimize(g.normals({n++, 0, 0, 0}));
    state.SetItemsProcessed(2 * state.iterations());
}
BENCHMARK(BM_PhiloxNormals);

static void BM_FftRoundTrip(benchmark::State& state)
{
    const int M = static_cast<int>(state.range(0));
    const Fft fft(M);
    std::vector<double> f(M, 1.0);
    std::vector<std::complex<double>> c(M / 2 + 1);
    for (auto _ : state) {
        fft.forward(f.data(), c.data());
        fft.inverse(c.data(), f.data());
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_FftRoundTrip)->Arg(64)->Arg(512);

static void BM_CoproductMinus(benchmark::State& state)
{
    const auto tree = iota(parse_symbol("Xi I(Xi)^2"));
    for (auto _ : state) benchmark::DoNotOptimize(coproduct_minus(tree));
}
BENCHMARK(BM_CoproductMinus);

static void BM_RenormalisationMapBasis(benchmark::State& state)
{
    const auto basis = enumerate_basis(default_zeta(), default_kappa());
    for (auto _ : state) {
        RenormalisationMap M;
        for (const auto& s : basis) benchmark::DoNotOptimize(M(s));
    }
}
BENCHMARK(BM_RenormalisationMapBasis)->Unit(benchmark::kMillisecond);

static void BM_StochasticConvolution(benchmark::State& state)
{
    const int M = static_cast<int>(state.range(0));
    const auto g = TorusGrid::over(M, 0.25 / 256, 0.25);
    const auto d = WhiteNoiseDraw::generate(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(stochastic_convolution(d));
}
BENCHMARK(BM_StochasticConvolution)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_ModelBoundProbe(benchmark::State& state)
{
    const int M = 128;
    const double eps = 0.1;
    const auto g = TorusGrid::over(M, eps * eps / 64, 0.8, -0.0125);
    const auto xi = mollify_noise(WhiteNoiseDraw::generate(g, 3, false), eps);
    int origin = 0;
    while (xi.time(origin) < 0) ++origin;
    const auto ctx = build_bphz_model(build_canonical_model(xi, eps, origin), 3.98303, 4.68368);
    int r0 = 0;
    while (ctx.time(r0) < 0.3) ++r0;
    const auto pts = sample_points(ctx, r0, r0 + 8, 2, 4);
    const auto tau = parse_symbol("Xi I(Xi)");
    for (auto _ : state) benchmark::DoNotOptimize(model_bound_probe(ctx, tau, dyadic_levels(4), pts));
}
BENCHMARK(BM_ModelBoundProbe)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
