#include <benchmark/benchmark.h>

#include <vector>

#include "mero/explore.hpp"
#include "mero/mapping.hpp"
#include "mero/random.hpp"
#include "mero/schwarz.hpp"
#include "mero/series.hpp"
#include "mero/uclass.hpp"
#include "mero/verify.hpp"

using namespace mero;

namespace {

ConstructionSpec sample_spec(std::size_t order) {
    const ClassParams params = ClassParams::make(0.7, {0.9, 0.1});
    return {params, {0.5, 0.5}, SchwarzSpec::blaschke({{0.3, 0.2}, {-0.5, 0.1}}, {0.0, 1.0}), order};
}

} // namespace

static void BM_SeriesReciprocal(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Complex> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = {1.0 / static_cast<double>(k + 1), 0.1};
    const PowerSeries s(std::move(c));
    for (auto _ : state) benchmark::DoNotOptimize(reciprocal(s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesReciprocal)->RangeMultiplier(2)->Range(32, 512)->Complexity();

static void BM_Construct(benchmark::State& state) {
    const ConstructionSpec spec = sample_spec(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(construct(spec));
}
BENCHMARK(BM_Construct)->Arg(64)->Arg(128)->Arg(256);

static void BM_QuadraturePoint(benchmark::State& state) {
    const Mapping f = construction_map(sample_spec(16));
    const Complex z{0.6, 0.7};
    for (auto _ : state) benchmark::DoNotOptimize(f.recip(z));
}
BENCHMARK(BM_QuadraturePoint);

static void BM_CauchyDft(benchmark::State& state) {
    const PowerSeries g = reciprocal_series(sample_spec(32));
    for (auto _ : state) {
        benchmark::DoNotOptimize(coeffs_by_cauchy_dft([&](Complex z) { return evaluate(g, z); }, 0.5, 32, 1024));
    }
}
BENCHMARK(BM_CauchyDft);

static void BM_OracleWide(benchmark::State& state) {
    const ConstructionSpec spec = sample_spec(32);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_cross_check(spec, 0.5, 32));
}
BENCHMARK(BM_OracleWide)->Unit(benchmark::kMillisecond);

static void BM_Membership(benchmark::State& state) {
    const ConstructionSpec spec = sample_spec(16);
    const Mapping f = construction_map(spec);
    const SamplingGrid grid{{0.5, 0.9, 0.99, 0.999}, 512, 1, true, {}};
    for (auto _ : state) benchmark::DoNotOptimize(membership(f, spec.params, grid));
}
BENCHMARK(BM_Membership)->Unit(benchmark::kMillisecond);

static void BM_Subordination(benchmark::State& state) {
    const PointEvaluator h = [](Complex z) { return 1.0 + z + 0.2 * z * z; };
    const PointEvaluator g = [&](Complex z) { return h(0.8 * z * z); };
    const std::vector<double> radii{0.5, 0.9};
    for (auto _ : state) benchmark::DoNotOptimize(subordination_check(g, h, radii));
}
BENCHMARK(BM_Subordination)->Unit(benchmark::kMillisecond);

static void BM_Problem2(benchmark::State& state) {
    const ClassParams params = ClassParams::make(0.8, 0.9);
    OptimizeConfig config;
    config.starts = 4;
    for (auto _ : state) benchmark::DoNotOptimize(problem2_maximize(params, 1.0, config));
}
BENCHMARK(BM_Problem2)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
    Rng rng(3);
    std::vector<ClassParams> grid;
    while (grid.size() < 1000) {
        const double lambda = rng.uniform(0.05, 1.0);
        const Complex mu{rng.uniform(0.0, 2.0), rng.uniform(-1.0, 1.0)};
        if (std::abs(1.0 - mu) < lambda) grid.push_back(ClassParams::make(lambda, mu));
    }
    for (auto _ : state) {
        for (const auto& p : grid) benchmark::DoNotOptimize(classify(p));
    }
}
BENCHMARK(BM_Classify);
BENCHMARK_MAIN();
