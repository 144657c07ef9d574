#pragma once

#include "segbite/label_map.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace segbite {

/// Cluster ids aligned to the row-major enumeration of ground-truth
/// foreground pixels.
using PixelClustering = std::vector<std::uint32_t>;

/// What to do with ground-truth foreground pixels the system left
/// unlabeled: collect them in one shared extra cluster per page, or give
/// each its own singleton cluster (the stricter reading).
enum class MissingPolicy {
    ExtraCluster,
    Singletons,
};

enum class Aggregation {
    Macro,         // unweighted mean of per-page scores
    PixelWeighted, // pooled by foreground pixel count
};

/// Cross-tabulation of two clusterings over the same pixels. Labels are
/// kept as-is; only labels that occur appear in the sums.
struct ContingencyTable {
    struct Cell {
        std::uint32_t row_label;
        std::uint32_t col_label;
        std::int64_t count;
    };

    std::vector<std::pair<std::uint32_t, std::int64_t>> row_sums; // gt label -> a_i
    std::vector<std::pair<std::uint32_t, std::int64_t>> col_sums; // pred label -> b_j
    std::vector<Cell> cells;                                      // n_ij > 0 only
    std::int64_t total = 0;

    static ContingencyTable build(const PixelClustering& gt, const PixelClustering& pred);
};

/// Exact pair-agreement counts; rand index = agreements / pairs.
struct PairCounts {
    std::int64_t agreements = 0;
    std::int64_t pairs = 0;

    double value() const { return double(agreements) / double(pairs); }

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Enumerates the pixels with nonzero gt label in row-major order. The gt
/// clustering carries the gt labels; the pred clustering carries the pred
/// labels where nonzero and fresh ids per `policy` where the prediction
/// is background. Throws ArgumentError on dimension mismatch.
std::pair<PixelClustering, PixelClustering>
align_prediction(const LabelMap& gt, const LabelMap& pred, MissingPolicy policy);

/// Rand index via the contingency identity
///   RI = [C(n,2) + 2*sum_ij C(n_ij,2) - sum_i C(a_i,2) - sum_j C(b_j,2)] / C(n,2)
/// with exact integer arithmetic; no precision loss up to n = 1e8 pixels.
/// Throws ArgumentError on length mismatch, UndefinedMetricError for n < 2.
PairCounts rand_index_counts(const PixelClustering& gt, const PixelClustering& pred);
double rand_index(const PixelClustering& gt, const PixelClustering& pred);

/// Literal pair enumeration, O(n^2); the ground truth the fast path is
/// checked against. Limited to n <= 10,000.
PairCounts rand_index_bruteforce_counts(const PixelClustering& gt, const PixelClustering& pred);
double rand_index_bruteforce(const PixelClustering& gt, const PixelClustering& pred);

/// align_prediction + rand_index. nullopt when the page has fewer than
/// two ground-truth foreground pixels (reported as skipped, not scored).
std::optional<std::pair<double, std::uint64_t>>
evaluate_page(const LabelMap& gt, const LabelMap& pred, MissingPolicy policy);

struct PageScore {
    std::string page_id;
    double rand_index = 0.0;
    std::uint64_t foreground_pixels = 0;
};

struct BootstrapResult {
    double low = 0.0;
    double high = 0.0;
    double point = 0.0;
};

double aggregate_scores(const std::vector<PageScore>& pages, Aggregation aggregation);

/// Percentile bootstrap over pages (pages are the independent sampling
/// unit). Resamples `replicates` times with replacement, computes the
/// chosen aggregate per resample and reports the empirical
/// [alpha/2, 1-alpha/2] percentiles (nearest rank, so the endpoints are
/// realized replicate values). Deterministic given the seed.
/// Throws ArgumentError for fewer than 2 pages or replicates < 1.
BootstrapResult bootstrap_ci(const std::vector<PageScore>& pages, int replicates = 1000,
                             double alpha = 0.05, std::uint64_t seed = 0,
                             Aggregation aggregation = Aggregation::Macro);

} // namespace segbite
