#include <benchmark/benchmark.h>

#include "modalcores/clustering.hpp"
#include "modalcores/density.hpp"
#include "modalcores/knn_index.hpp"
#include "modalcores/mcores.hpp"
#include "modalcores/synthgen.hpp"

namespace {

using namespace mcores;

SyntheticData make_data(int n) { return gen_gaussian_mixture(three_gaussians_preset(n), 7); }

void BM_BuildIndex(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SyntheticData synth = make_data(n);
    for (auto _ : state) {
        KnnIndex index = build_index(synth.data, 30);
        benchmark::DoNotOptimize(index.radii().data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_BuildIndex)->Range(2000, 64000)->Complexity()->Unit(benchmark::kMillisecond);

void BM_Descent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SyntheticData synth = make_data(n);
    const KnnIndex index = build_index(synth.data, 30);
    const DensityEstimate density = knn_density(index);
    McoresConfig config;
    config.k = 30;
    for (auto _ : state) {
        auto estimates = estimate_modal_sets(synth.data, index, density, config);
        benchmark::DoNotOptimize(estimates.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Descent)->Range(2000, 64000)->Complexity()->Unit(benchmark::kMillisecond);

void BM_Assign(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SyntheticData synth = make_data(n);
    const KnnIndex index = build_index(synth.data, 30);
    const DensityEstimate density = knn_density(index);
    McoresConfig config;
    config.k = 30;
    const auto estimates = estimate_modal_sets(synth.data, index, density, config);
    for (auto _ : state) {
        auto result = assign(synth.data, estimates);
        benchmark::DoNotOptimize(result.labels.data());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Assign)->Range(2000, 16000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
