#include <doctest.h>

#include "segbite/errors.hpp"
#include "segbite/metrics.hpp"
#include "segbite/rng.hpp"

#include <algorithm>
#include <random>

using namespace segbite;

namespace {

LabelMap map_of(int width, int height, std::vector<std::uint32_t> labels) {
    LabelMap map;
    map.size = {width, height};
    map.labels = std::move(labels);
    return map;
}

PixelClustering random_clustering(std::mt19937_64& rng, std::size_t n, std::uint32_t max_label) {
    PixelClustering c(n);
    for (auto& v : c) v = std::uint32_t(bounded_rand(rng, max_label + 1));
    return c;
}

} // namespace

TEST_SUITE("metrics") {

TEST_CASE("align_prediction: extra-cluster pools the missing pixels") {
    const LabelMap gt = map_of(2, 2, {1, 1, 2, 0});
    const LabelMap pred = map_of(2, 2, {0, 5, 5, 9});
    const auto [g, p] = align_prediction(gt, pred, MissingPolicy::ExtraCluster);
    // Only the three gt-foreground pixels are enumerated; the background
    // pixel's pred label 9 plays no role.
    CHECK(g == PixelClustering{1, 1, 2});
    CHECK(p == PixelClustering{6, 5, 5}); // fresh id = max(5) + 1
}

TEST_CASE("align_prediction: singletons isolate each missing pixel") {
    const LabelMap gt = map_of(2, 2, {1, 1, 2, 2});
    const LabelMap pred = map_of(2, 2, {0, 5, 0, 5});
    const auto [g, p] = align_prediction(gt, pred, MissingPolicy::Singletons);
    CHECK(g == PixelClustering{1, 1, 2, 2});
    CHECK(p == PixelClustering{6, 5, 7, 5}); // 6, then 7
}

TEST_CASE("align_prediction: all-background prediction starts fresh ids at 1") {
    const LabelMap gt = map_of(2, 1, {1, 2});
    const LabelMap pred = map_of(2, 1, {0, 0});
    const auto extra = align_prediction(gt, pred, MissingPolicy::ExtraCluster);
    CHECK(extra.second == PixelClustering{1, 1});
    const auto single = align_prediction(gt, pred, MissingPolicy::Singletons);
    CHECK(single.second == PixelClustering{1, 2});
}

TEST_CASE("align_prediction: dimension mismatch is rejected") {
    const LabelMap gt = map_of(2, 2, {1, 1, 2, 0});
    const LabelMap pred = map_of(2, 1, {1, 1});
    CHECK_THROWS_AS(align_prediction(gt, pred, MissingPolicy::ExtraCluster), ArgumentError);
}

TEST_CASE("rand index is 1 for identical clusterings and relabelings") {
    const PixelClustering a{3, 3, 1, 1, 7, 7, 7};
    CHECK(rand_index(a, a) == 1.0);
    // Bijective relabeling: same partition, same index.
    PixelClustering b = a;
    for (auto& v : b) v += 100;
    CHECK(rand_index(a, b) == 1.0);
}

TEST_CASE("rand index matches a worked example") {
    // Pairs: 6; agreeing pairs: (0,3) and (1,2) only -> 2/6.
    const PixelClustering gt{1, 1, 2, 2};
    const PixelClustering pred{1, 2, 1, 2};
    const PairCounts counts = rand_index_counts(gt, pred);
    CHECK(counts.pairs == 6);
    CHECK(counts.agreements == 2);
    CHECK(rand_index(gt, pred) == doctest::Approx(2.0 / 6.0));
    CHECK(counts == rand_index_bruteforce_counts(gt, pred));
}

TEST_CASE("fast path equals brute force, as integers, on random data") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + bounded_rand(rng, 299);
        const auto gt = random_clustering(rng, n, 5);
        const auto pred = random_clustering(rng, n, 5);
        const PairCounts fast = rand_index_counts(gt, pred);
        const PairCounts slow = rand_index_bruteforce_counts(gt, pred);
        REQUIRE(fast == slow);
        REQUIRE(fast.pairs == std::int64_t(n) * std::int64_t(n - 1) / 2);
    }
}

TEST_CASE("huge label values take the sparse contingency path and agree") {
    std::mt19937_64 rng(809);
    const std::size_t n = 500;
    auto gt = random_clustering(rng, n, 4);
    auto pred = random_clustering(rng, n, 4);
    const PairCounts dense = rand_index_counts(gt, pred);
    // Shifting labels far past the dense-table budget changes the storage
    // strategy but not the partition.
    for (auto& v : gt) v += 3'000'000;
    for (auto& v : pred) v += 2'000'000'000;
    const PairCounts sparse = rand_index_counts(gt, pred);
    CHECK(dense == sparse);
}

TEST_CASE("contingency table sums are consistent") {
    const PixelClustering gt{1, 1, 2, 2, 2, 9};
    const PixelClustering pred{4, 4, 4, 8, 8, 8};
    const ContingencyTable table = ContingencyTable::build(gt, pred);
    CHECK(table.total == 6);
    std::int64_t row_total = 0, col_total = 0, cell_total = 0;
    for (const auto& [label, count] : table.row_sums) row_total += count;
    for (const auto& [label, count] : table.col_sums) col_total += count;
    for (const auto& cell : table.cells) cell_total += cell.count;
    CHECK(row_total == 6);
    CHECK(col_total == 6);
    CHECK(cell_total == 6);
    // gt=2 splits 1/2 across pred 4/8; every other pair is a single cell.
    CHECK(table.cells.size() == 4);
}

TEST_CASE("degenerate inputs raise the right errors") {
    CHECK_THROWS_AS(rand_index({}, {}), UndefinedMetricError);
    CHECK_THROWS_AS(rand_index({1}, {1}), UndefinedMetricError);
    CHECK_THROWS_AS(rand_index({1, 2}, {1}), ArgumentError);
    CHECK_THROWS_AS(rand_index_bruteforce(PixelClustering(10001, 1), PixelClustering(10001, 1)),
                    ArgumentError);
}

TEST_CASE("evaluate_page skips pages with under two foreground pixels") {
    const LabelMap empty_gt = map_of(2, 2, {0, 0, 0, 0});
    const LabelMap one_px = map_of(2, 2, {1, 0, 0, 0});
    const LabelMap pred = map_of(2, 2, {1, 1, 1, 1});
    CHECK_FALSE(evaluate_page(empty_gt, pred, MissingPolicy::ExtraCluster).has_value());
    CHECK_FALSE(evaluate_page(one_px, pred, MissingPolicy::ExtraCluster).has_value());

    const LabelMap gt = map_of(2, 2, {1, 1, 2, 0});
    const auto scored = evaluate_page(gt, gt, MissingPolicy::ExtraCluster);
    REQUIRE(scored.has_value());
    CHECK(scored->first == 1.0);
    CHECK(scored->second == 3);
}

TEST_CASE("missing-pixel policies differ exactly as designed") {
    // gt: one 4-pixel segment; prediction misses two of its pixels.
    const LabelMap gt = map_of(4, 1, {1, 1, 1, 1});
    const LabelMap pred = map_of(4, 1, {7, 7, 0, 0});
    // Extra-cluster: pred partition {0,1 | 2,3} -> agreements within
    // {0,1} and {2,3}: pairs (0,1) and (2,3) agree = 2 of 6.
    const auto extra = evaluate_page(gt, pred, MissingPolicy::ExtraCluster);
    REQUIRE(extra.has_value());
    CHECK(extra->first == doctest::Approx(2.0 / 6.0));
    // Singletons: pred partition {0,1 | 2 | 3} -> only (0,1) agrees.
    const auto single = evaluate_page(gt, pred, MissingPolicy::Singletons);
    REQUIRE(single.has_value());
    CHECK(single->first == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("aggregation: macro averages pages, pixel pools them") {
    const std::vector<PageScore> pages = {
        {"a", 1.0, 100},
        {"b", 0.5, 300},
    };
    CHECK(aggregate_scores(pages, Aggregation::Macro) == doctest::Approx(0.75));
    CHECK(aggregate_scores(pages, Aggregation::PixelWeighted) ==
          doctest::Approx((1.0 * 100 + 0.5 * 300) / 400.0));
    CHECK_THROWS_AS(aggregate_scores({}, Aggregation::Macro), ArgumentError);
}

TEST_CASE("bootstrap is deterministic for a seed and ordered around the point") {
    std::vector<PageScore> pages;
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 12; ++i) {
        pages.push_back(PageScore{"p" + std::to_string(i),
                                  double(bounded_rand(rng, 1000)) / 999.0,
                                  50 + bounded_rand(rng, 500)});
    }
    const BootstrapResult a = bootstrap_ci(pages, 500, 0.05, 77);
    const BootstrapResult b = bootstrap_ci(pages, 500, 0.05, 77);
    CHECK(a.low == b.low);
    CHECK(a.high == b.high);
    CHECK(a.point == b.point);
    CHECK(a.low <= a.point);
    CHECK(a.point <= a.high);
    CHECK(a.point == doctest::Approx(aggregate_scores(pages, Aggregation::Macro)));

    const BootstrapResult c = bootstrap_ci(pages, 500, 0.05, 78);
    CHECK((c.low != a.low || c.high != a.high)); // different seed, different resamples
}

TEST_CASE("bootstrap endpoints are realized replicate values") {
    // Two pages scoring 0 and 1: every macro resample is 0.0, 0.5 or 1.0.
    const std::vector<PageScore> pages = {{"a", 0.0, 10}, {"b", 1.0, 10}};
    const BootstrapResult r = bootstrap_ci(pages, 400, 0.05, 5);
    auto realized = [](double v) { return v == 0.0 || v == 0.5 || v == 1.0; };
    CHECK(realized(r.low));
    CHECK(realized(r.high));
    CHECK(r.point == 0.5);
    // With 400 draws both extremes appear with overwhelming probability.
    CHECK(r.low == 0.0);
    CHECK(r.high == 1.0);
}

TEST_CASE("narrow alpha widens the interval") {
    std::vector<PageScore> pages;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        pages.push_back(PageScore{"p" + std::to_string(i),
                                  double(bounded_rand(rng, 1000)) / 999.0, 100});
    }
    const BootstrapResult wide = bootstrap_ci(pages, 1000, 0.01, 3);
    const BootstrapResult narrow = bootstrap_ci(pages, 1000, 0.50, 3);
    CHECK(wide.low <= narrow.low);
    CHECK(narrow.high <= wide.high);
}

TEST_CASE("bootstrap argument validation") {
    const std::vector<PageScore> one = {{"a", 0.5, 10}};
    const std::vector<PageScore> two = {{"a", 0.5, 10}, {"b", 0.7, 10}};
    CHECK_THROWS_AS(bootstrap_ci(one, 100, 0.05, 0), ArgumentError);
    CHECK_THROWS_AS(bootstrap_ci(two, 0, 0.05, 0), ArgumentError);
    CHECK_THROWS_AS(bootstrap_ci(two, 100, 0.0, 0), ArgumentError);
    CHECK_THROWS_AS(bootstrap_ci(two, 100, 1.0, 0), ArgumentError);
    CHECK_NOTHROW(bootstrap_ci(two, 100, 0.05, 0));
}

TEST_CASE("pixel-weighted bootstrap uses the resampled weights") {
    const std::vector<PageScore> pages = {{"a", 0.0, 100}, {"b", 1.0, 300}};
    const BootstrapResult r = bootstrap_ci(pages, 300, 0.05, 9, Aggregation::PixelWeighted);
    CHECK(r.point == doctest::Approx(0.75));
    // Possible resample values: {a,a}=0, {b,b}=1, {a,b}=0.75.
    auto realized = [](double v) {
        return v == 0.0 || v == 1.0 || v == doctest::Approx(0.75);
    };
    CHECK(realized(r.low));
    CHECK(realized(r.high));
}

} // TEST_SUITE
