#pragma once

#include "segbite/geometry.hpp"
#include "segbite/prediction.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace segbite {

constexpr std::size_t kNodeFeatureCount = 29;
constexpr std::size_t kEdgeFeatureCount = 12;

using NodeFeatures = std::array<double, kNodeFeatureCount>;
using EdgeFeatures = std::array<double, kEdgeFeatureCount>;

/// Per-box geometry descriptor: 13 absolute values, the same 13 scaled
/// by the page frame, and 3 page-level values. Works with any detector's
/// boxes; throws ArgumentError on degenerate box or page dimensions.
NodeFeatures node_features(const BBox& box, const Size& page);

/// Per-pair descriptor: center offset and distance (absolute and
/// page-relative), axis gaps (absolute and relative), box IoU, and a
/// text-similarity slot that defaults to 0 when no transcription signal
/// is available.
EdgeFeatures edge_features(const BBox& a, const BBox& b, const Size& page,
                           double text_similarity = 0.0);

struct ColumnStats {
    std::vector<double> mean;
    std::vector<double> stddev;
};

/// Column-wise z-score normalization in place (population stddev).
/// Constant columns normalize to 0. Returns the stats so the same
/// transform can be replayed on other rows.
ColumnStats zscore_normalize(std::vector<std::vector<double>>& rows);

/// Drops every box that is enclosed (intersection/own-area >= 0.95) by a
/// surviving box of larger-or-equal area. Boxes are considered in
/// descending area order, input order breaking ties, so the largest of a
/// nested stack always survives. Returns kept indices in input order.
std::vector<std::size_t> containment_filter(const std::vector<BBox>& boxes);

/// Groups detections by following each row's argmax in a pairwise score
/// matrix: i points at its best partner, a self-vote ends the chain, and
/// the weakly connected components of the resulting graph are the
/// groups. Ties resolve to the lowest index. With exclude_diagonal the
/// self-vote is unavailable and every row must pick a partner.
/// Non-finite scores throw ArgumentError. Groups are ordered by their
/// smallest member; members ascend.
std::vector<std::vector<std::size_t>> chains_from_scores(const ScoreMatrix& scores,
                                                         bool exclude_diagonal = false);

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

/// Groups detections whose embeddings reach the cosine threshold,
/// transitively (single-link). Zero vectors throw ArgumentError naming
/// the offending index.
std::vector<std::vector<std::size_t>> cosine_merge(const std::vector<std::vector<double>>& embeddings,
                                                   double threshold = 0.5);

enum class MergeMethod {
    Chains, // pairwise score matrix
    Cosine, // embedding similarity
};

struct MergeOptions {
    MergeMethod method = MergeMethod::Chains;
    bool apply_containment_filter = true;
    bool exclude_diagonal = false;
    double cosine_threshold = 0.5;
};

struct MergeResult {
    std::vector<std::size_t> kept;                 // original indices that survived
    std::vector<std::vector<std::size_t>> groups;  // original indices, grouped
    PredictionFile output;                         // kept boxes + chain relations
};

/// Full pipeline over one prediction file: optional containment filter,
/// then grouping by the chosen method. The output file holds the kept
/// boxes (and their classes) with relations chaining each group in
/// reading order; the consumed scores/embeddings are not carried over.
MergeResult merge_prediction(const PredictionFile& pred, const MergeOptions& options);

} // namespace segbite
