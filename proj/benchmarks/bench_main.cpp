#include "segbite/metrics.hpp"
#include "segbite/rng.hpp"
#include "segbite/threshold.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace segbite;

namespace {

PixelClustering random_clustering(std::mt19937_64& rng, std::size_t n,
                                  std::uint32_t clusters, std::uint32_t offset = 0) {
    PixelClustering out(n);
    for (auto& v : out) v = offset + std::uint32_t(bounded_rand(rng, clusters));
    return out;
}

void bm_rand_index(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    std::mt19937_64 rng(1);
    const PixelClustering gt = random_clustering(rng, n, 12);
    const PixelClustering pred = random_clustering(rng, n, 12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rand_index_counts(gt, pred));
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(n));
}

// Labels far apart force the sorted packed-key path instead of the dense
// direct-index table.
void bm_rand_index_sparse_labels(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    std::mt19937_64 rng(2);
    const PixelClustering gt = random_clustering(rng, n, 12, 3000000);
    const PixelClustering pred = random_clustering(rng, n, 12, 2000000000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rand_index_counts(gt, pred));
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(n));
}

void bm_adaptive_threshold(benchmark::State& state) {
    const int window = int(state.range(0));
    std::mt19937_64 rng(3);
    GrayImage img;
    img.size = {1200, 1700};
    img.pixels.resize(std::size_t(img.size.area()));
    for (auto& px : img.pixels) px = std::uint8_t(bounded_rand(rng, 256));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adaptive_threshold(img, window, 10.0, false));
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) * img.size.area());
}

void bm_align_prediction(benchmark::State& state) {
    std::mt19937_64 rng(4);
    LabelMap gt, pred;
    gt.size = {1200, 1700};
    gt.labels.resize(std::size_t(gt.size.area()));
    for (auto& v : gt.labels) v = std::uint32_t(bounded_rand(rng, 13)); // 0 = background
    pred = gt;
    for (auto& v : pred.labels) {
        if (bounded_rand(rng, 20) == 0) v = 0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(align_prediction(gt, pred, MissingPolicy::Singletons));
    }
    state.SetItemsProcessed(std::int64_t(state.iterations()) * gt.size.area());
}

} // namespace

BENCHMARK(bm_rand_index)->Arg(1 << 16)->Arg(1 << 19)->Arg(1 << 21);
BENCHMARK(bm_rand_index_sparse_labels)->Arg(1 << 16)->Arg(1 << 19);
BENCHMARK(bm_adaptive_threshold)->Arg(31)->Arg(301);
BENCHMARK(bm_align_prediction);

BENCHMARK_MAIN();
