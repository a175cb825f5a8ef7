#include <benchmark/benchmark.h>

#include "bihankel/bound.hpp"
#include "bihankel/coefficients.hpp"
#include "bihankel/falsify.hpp"
#include "bihankel/series.hpp"

namespace {

using bihankel::ClassParams;
using bihankel::cplx;
using bihankel::PhiSpec;

const ClassParams kParams(cplx(0.5, 0.5), 2.0, 0.5);
const PhiSpec kPhi = PhiSpec::janowski(0.5, -0.5);

void BM_compose(benchmark::State& state) {
    const bihankel::TruncatedSeries outer({1.0, 2.0, 2.0, 2.0});
    const bihankel::TruncatedSeries inner({0.0, cplx(0.4, 0.2), cplx(0.1, -0.3), cplx(0.0, 0.5)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(outer, inner));
    }
}
BENCHMARK(BM_compose);

void BM_coefficients_from_schwarz(benchmark::State& state) {
    bihankel::SplitMix64 gen(1);
    const bihankel::SchwarzTuple tuple = bihankel::draw_tuple(gen, true, false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coefficients_from_schwarz(kParams, kPhi, tuple));
    }
}
BENCHMARK(BM_coefficients_from_schwarz);

void BM_theorem_bound(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem_bound(kParams, kPhi));
    }
}
BENCHMARK(BM_theorem_bound);

void BM_analyze_surface(benchmark::State& state) {
    const bihankel::TTerms terms = t_terms(kParams, kPhi, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bihankel::analyze_surface(terms, static_cast<int>(state.range(0)), 3));
    }
}
BENCHMARK(BM_analyze_surface)->Arg(41)->Arg(101);

void BM_falsify(benchmark::State& state) {
    bihankel::FalsifyConfig config{kParams, kPhi, static_cast<std::uint64_t>(state.range(0)), 42};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bihankel::falsify(config, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_falsify)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
