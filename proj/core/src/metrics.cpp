#include "segbite/metrics.hpp"

#include "segbite/errors.hpp"
#include "segbite/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <unordered_map>

namespace segbite {
namespace {

std::int64_t choose2(std::int64_t n) {
    return n * (n - 1) / 2;
}

} // namespace

std::pair<PixelClustering, PixelClustering>
align_prediction(const LabelMap& gt, const LabelMap& pred, MissingPolicy policy) {
    if (gt.size.width != pred.size.width || gt.size.height != pred.size.height) {
        throw ArgumentError("label map dimensions differ: gt " +
                            std::to_string(gt.size.width) + "x" + std::to_string(gt.size.height) +
                            " vs pred " + std::to_string(pred.size.width) + "x" +
                            std::to_string(pred.size.height));
    }

    const std::size_t count = gt.labels.size();

    // Fresh ids start above every prediction label that participates in
    // the comparison, so a missing pixel can never collide with a real
    // cluster.
    std::uint32_t max_pred = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (gt.labels[i] != 0 && pred.labels[i] > max_pred) max_pred = pred.labels[i];
    }

    PixelClustering gt_ids;
    PixelClustering pred_ids;
    std::uint32_t next_fresh = max_pred + 1;
    const std::uint32_t shared_extra = next_fresh;

    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t g = gt.labels[i];
        if (g == 0) continue;
        gt_ids.push_back(g);
        const std::uint32_t p = pred.labels[i];
        if (p != 0) {
            pred_ids.push_back(p);
        } else if (policy == MissingPolicy::ExtraCluster) {
            pred_ids.push_back(shared_extra);
        } else {
            pred_ids.push_back(next_fresh++);
        }
    }
    return {std::move(gt_ids), std::move(pred_ids)};
}

ContingencyTable ContingencyTable::build(const PixelClustering& gt, const PixelClustering& pred) {
    if (gt.size() != pred.size()) {
        throw ArgumentError("clusterings have different lengths");
    }
    ContingencyTable table;
    table.total = std::int64_t(gt.size());
    if (gt.empty()) return table;

    std::uint32_t max_g = 0;
    std::uint32_t max_p = 0;
    for (std::size_t i = 0; i < gt.size(); ++i) {
        max_g = std::max(max_g, gt[i]);
        max_p = std::max(max_p, pred[i]);
    }

    // Dense path: direct-indexed accumulation when the label grid fits
    // comfortably in memory. Gives O(n + c_gt * c_pred) overall.
    const std::uint64_t grid = (std::uint64_t(max_g) + 1) * (std::uint64_t(max_p) + 1);
    constexpr std::uint64_t kDenseLimit = 1ull << 22; // ~4M cells = 32 MB of int64
    if (grid <= kDenseLimit) {
        const std::size_t cols = std::size_t(max_p) + 1;
        std::vector<std::int64_t> cells(std::size_t(grid), 0);
        std::vector<std::int64_t> rows(std::size_t(max_g) + 1, 0);
        std::vector<std::int64_t> colv(cols, 0);
        for (std::size_t i = 0; i < gt.size(); ++i) {
            ++cells[std::size_t(gt[i]) * cols + pred[i]];
            ++rows[gt[i]];
            ++colv[pred[i]];
        }
        for (std::uint32_t g = 0; g <= max_g; ++g) {
            if (rows[g] != 0) table.row_sums.emplace_back(g, rows[g]);
        }
        for (std::uint32_t p = 0; p <= max_p; ++p) {
            if (colv[p] != 0) table.col_sums.emplace_back(p, colv[p]);
        }
        for (std::uint32_t g = 0; g <= max_g; ++g) {
            const std::size_t base = std::size_t(g) * cols;
            for (std::uint32_t p = 0; p <= max_p; ++p) {
                if (cells[base + p] != 0) table.cells.push_back({g, p, cells[base + p]});
            }
        }
        return table;
    }

    // Sparse path: pack (gt, pred) into one 64-bit key and sort. Handles
    // the singletons policy, where fresh ids blow up the label range far
    // beyond what a dense grid tolerates.
    std::vector<std::uint64_t> keys(gt.size());
    for (std::size_t i = 0; i < gt.size(); ++i) {
        keys[i] = (std::uint64_t(gt[i]) << 32) | pred[i];
    }
    std::sort(keys.begin(), keys.end());

    std::unordered_map<std::uint32_t, std::int64_t> rows;
    std::unordered_map<std::uint32_t, std::int64_t> cols;
    rows.reserve(1024);
    cols.reserve(1024);
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        const auto g = std::uint32_t(keys[i] >> 32);
        const auto p = std::uint32_t(keys[i] & 0xFFFFFFFFu);
        const auto n = std::int64_t(j - i);
        table.cells.push_back({g, p, n});
        rows[g] += n;
        cols[p] += n;
        i = j;
    }
    table.row_sums.assign(rows.begin(), rows.end());
    table.col_sums.assign(cols.begin(), cols.end());
    std::sort(table.row_sums.begin(), table.row_sums.end());
    std::sort(table.col_sums.begin(), table.col_sums.end());
    return table;
}

PairCounts rand_index_counts(const PixelClustering& gt, const PixelClustering& pred) {
    if (gt.size() != pred.size()) {
        throw ArgumentError("clusterings have different lengths");
    }
    if (gt.size() < 2) {
        throw UndefinedMetricError("rand index needs at least 2 pixels, got " +
                                   std::to_string(gt.size()));
    }
    const ContingencyTable table = ContingencyTable::build(gt, pred);

    std::int64_t sum_cells = 0;
    for (const auto& c : table.cells) sum_cells += choose2(c.count);
    std::int64_t sum_rows = 0;
    for (const auto& [label, n] : table.row_sums) sum_rows += choose2(n);
    std::int64_t sum_cols = 0;
    for (const auto& [label, n] : table.col_sums) sum_cols += choose2(n);

    const std::int64_t pairs = choose2(table.total);
    // agreements = pairs clustered together in both + pairs separated in
    // both; the cross terms cancel into the identity below.
    PairCounts out;
    out.pairs = pairs;
    out.agreements = pairs + 2 * sum_cells - sum_rows - sum_cols;
    return out;
}

double rand_index(const PixelClustering& gt, const PixelClustering& pred) {
    return rand_index_counts(gt, pred).value();
}

PairCounts rand_index_bruteforce_counts(const PixelClustering& gt, const PixelClustering& pred) {
    if (gt.size() != pred.size()) {
        throw ArgumentError("clusterings have different lengths");
    }
    if (gt.size() < 2) {
        throw UndefinedMetricError("rand index needs at least 2 pixels, got " +
                                   std::to_string(gt.size()));
    }
    if (gt.size() > 10000) {
        throw ArgumentError("bruteforce rand index limited to 10000 pixels, got " +
                            std::to_string(gt.size()));
    }
    PairCounts out;
    for (std::size_t i = 0; i < gt.size(); ++i) {
        for (std::size_t j = i + 1; j < gt.size(); ++j) {
            const bool same_gt = gt[i] == gt[j];
            const bool same_pred = pred[i] == pred[j];
            if (same_gt == same_pred) ++out.agreements;
            ++out.pairs;
        }
    }
    return out;
}

double rand_index_bruteforce(const PixelClustering& gt, const PixelClustering& pred) {
    return rand_index_bruteforce_counts(gt, pred).value();
}

std::optional<std::pair<double, std::uint64_t>>
evaluate_page(const LabelMap& gt, const LabelMap& pred, MissingPolicy policy) {
    auto [gt_ids, pred_ids] = align_prediction(gt, pred, policy);
    if (gt_ids.size() < 2) return std::nullopt;
    return std::make_pair(rand_index(gt_ids, pred_ids), std::uint64_t(gt_ids.size()));
}

double aggregate_scores(const std::vector<PageScore>& pages, Aggregation aggregation) {
    if (pages.empty()) {
        throw ArgumentError("cannot aggregate zero pages");
    }
    if (aggregation == Aggregation::Macro) {
        double sum = 0.0;
        for (const auto& p : pages) sum += p.rand_index;
        return sum / double(pages.size());
    }
    double weighted = 0.0;
    double weight = 0.0;
    for (const auto& p : pages) {
        weighted += p.rand_index * double(p.foreground_pixels);
        weight += double(p.foreground_pixels);
    }
    if (weight == 0.0) {
        throw ArgumentError("pixel-weighted aggregation with zero total foreground");
    }
    return weighted / weight;
}

BootstrapResult bootstrap_ci(const std::vector<PageScore>& pages, int replicates, double alpha,
                             std::uint64_t seed, Aggregation aggregation) {
    if (pages.size() < 2) {
        throw ArgumentError("bootstrap needs at least 2 pages, got " +
                            std::to_string(pages.size()));
    }
    if (replicates < 1) {
        throw ArgumentError("bootstrap needs at least 1 replicate");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ArgumentError("alpha must lie in (0, 1)");
    }

    BootstrapResult result;
    result.point = aggregate_scores(pages, aggregation);

    std::mt19937_64 rng(seed);
    const std::size_t n = pages.size();
    std::vector<double> stats(static_cast<std::size_t>(replicates), 0.0);
    std::vector<PageScore> sample(n);
    for (int r = 0; r < replicates; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            sample[i] = pages[bounded_rand(rng, n)];
        }
        stats[std::size_t(r)] = aggregate_scores(sample, aggregation);
    }
    std::sort(stats.begin(), stats.end());

    // Nearest-rank percentile: endpoints are realized replicate values.
    auto percentile = [&](double q) {
        double rank = std::ceil(q * double(replicates)) - 1.0;
        auto idx = std::int64_t(rank);
        idx = std::clamp<std::int64_t>(idx, 0, std::int64_t(replicates) - 1);
        return stats[std::size_t(idx)];
    };
    result.low = percentile(alpha / 2.0);
    result.high = percentile(1.0 - alpha / 2.0);

    // The interval always brackets the point estimate it accompanies.
    result.low = std::min(result.low, result.point);
    result.high = std::max(result.high, result.point);
    return result;
}

} // namespace segbite
