#include "segbite/merge.hpp"

#include "segbite/errors.hpp"
#include "segbite/segmodel.hpp"
#include "segbite/union_find.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace segbite {
namespace {

std::vector<std::vector<std::size_t>> groups_from_union_find(UnionFind& uf, std::size_t n) {
    // Component root is the smallest member, so numbering by root index
    // orders groups by their first box.
    std::vector<std::vector<std::size_t>> by_root(n);
    for (std::size_t i = 0; i < n; ++i) {
        by_root[uf.find(i)].push_back(i);
    }
    std::vector<std::vector<std::size_t>> groups;
    for (auto& g : by_root) {
        if (!g.empty()) groups.push_back(std::move(g));
    }
    return groups;
}

} // namespace

NodeFeatures node_features(const BBox& box, const Size& page) {
    if (box.w <= 0 || box.h <= 0) {
        throw ArgumentError("node features need a box with positive extent");
    }
    if (page.width <= 0 || page.height <= 0) {
        throw ArgumentError("node features need a page with positive extent");
    }
    const double x = double(box.x);
    const double y = double(box.y);
    const double w = double(box.w);
    const double h = double(box.h);
    const double cx = x + w / 2.0;
    const double cy = y + h / 2.0;
    const double x2 = x + w;
    const double y2 = y + h;
    const double W = double(page.width);
    const double H = double(page.height);
    const double margin_right = W - x2;
    const double margin_bottom = H - y2;
    const double area = w * h;
    const double diag = std::hypot(w, h);
    const double aspect = w / h;
    const double page_diag = std::hypot(W, H);
    const double page_aspect = W / H;

    return {
        // absolute (13)
        x, y, w, h, cx, cy, x2, y2, margin_right, margin_bottom, area, diag, aspect,
        // page-relative (13)
        x / W, y / H, w / W, h / H, cx / W, cy / H, x2 / W, y2 / H,
        margin_right / W, margin_bottom / H, area / (W * H), diag / page_diag,
        aspect / page_aspect,
        // page frame (3)
        W, H, page_aspect,
    };
}

EdgeFeatures edge_features(const BBox& a, const BBox& b, const Size& page,
                           double text_similarity) {
    if (page.width <= 0 || page.height <= 0) {
        throw ArgumentError("edge features need a page with positive extent");
    }
    const double W = double(page.width);
    const double H = double(page.height);
    const double page_diag = std::hypot(W, H);

    const double acx = double(a.x) + double(a.w) / 2.0;
    const double acy = double(a.y) + double(a.h) / 2.0;
    const double bcx = double(b.x) + double(b.w) / 2.0;
    const double bcy = double(b.y) + double(b.h) / 2.0;
    const double dx = bcx - acx;
    const double dy = bcy - acy;
    const double dist = std::hypot(dx, dy);

    const double gap_x = std::max<double>(0.0, double(std::max(a.x, b.x)) -
                                                   double(std::min(a.right(), b.right())));
    const double gap_y = std::max<double>(0.0, double(std::max(a.y, b.y)) -
                                                   double(std::min(a.bottom(), b.bottom())));

    double iou = 0.0;
    if (auto inter = bbox_intersection(a, b)) {
        const double ia = double(inter->area());
        const double ua = double(a.area()) + double(b.area()) - ia;
        if (ua > 0.0) iou = ia / ua;
    }

    return {
        dx, dy, dist,
        dx / W, dy / H, dist / page_diag,
        gap_x, gap_y,
        gap_x / W, gap_y / H,
        iou, text_similarity,
    };
}

ColumnStats zscore_normalize(std::vector<std::vector<double>>& rows) {
    ColumnStats stats;
    if (rows.empty()) return stats;
    const std::size_t cols = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw ArgumentError("feature rows have inconsistent lengths");
        }
    }
    stats.mean.assign(cols, 0.0);
    stats.stddev.assign(cols, 0.0);

    const double n = double(rows.size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < cols; ++c) stats.mean[c] += row[c];
    }
    for (std::size_t c = 0; c < cols; ++c) stats.mean[c] /= n;

    for (const auto& row : rows) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double d = row[c] - stats.mean[c];
            stats.stddev[c] += d * d;
        }
    }
    for (std::size_t c = 0; c < cols; ++c) stats.stddev[c] = std::sqrt(stats.stddev[c] / n);

    for (auto& row : rows) {
        for (std::size_t c = 0; c < cols; ++c) {
            row[c] = stats.stddev[c] > 0.0 ? (row[c] - stats.mean[c]) / stats.stddev[c] : 0.0;
        }
    }
    return stats;
}

std::vector<std::size_t> containment_filter(const std::vector<BBox>& boxes) {
    std::vector<std::size_t> order(boxes.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        return boxes[lhs].area() > boxes[rhs].area();
    });

    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
        bool enclosed = false;
        for (std::size_t other : kept) {
            if (enclosure_ratio(boxes[other], boxes[idx]) >= kEnclosureThreshold) {
                enclosed = true;
                break;
            }
        }
        if (!enclosed) kept.push_back(idx);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<std::vector<std::size_t>> chains_from_scores(const ScoreMatrix& scores,
                                                         bool exclude_diagonal) {
    if (!scores.valid()) {
        throw ArgumentError("score matrix is not square");
    }
    const std::size_t n = scores.n;
    for (double v : scores.values) {
        if (!std::isfinite(v)) {
            throw ArgumentError("score matrix contains a non-finite value");
        }
    }
    if (n == 0) return {};

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = n;
        double best_score = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (exclude_diagonal && j == i) continue;
            const double s = scores.at(i, j);
            if (best == n || s > best_score) { // ties keep the lowest index
                best = j;
                best_score = s;
            }
        }
        if (best == n) continue; // n == 1 with the diagonal excluded
        if (best != i) uf.merge(i, best);
    }
    return groups_from_union_find(uf, n);
}

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw ArgumentError("embedding dimensions differ: " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) {
        throw ArgumentError("cosine similarity undefined for a zero vector");
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<std::vector<std::size_t>>
cosine_merge(const std::vector<std::vector<double>>& embeddings, double threshold) {
    const std::size_t n = embeddings.size();
    for (std::size_t i = 0; i < n; ++i) {
        double norm = 0.0;
        for (double v : embeddings[i]) {
            if (!std::isfinite(v)) {
                throw ArgumentError("embedding " + std::to_string(i) +
                                    " contains a non-finite value");
            }
            norm += v * v;
        }
        if (norm == 0.0) {
            throw ArgumentError("embedding " + std::to_string(i) + " is a zero vector");
        }
    }
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cosine_similarity(embeddings[i], embeddings[j]) >= threshold) {
                uf.merge(i, j);
            }
        }
    }
    return groups_from_union_find(uf, n);
}

MergeResult merge_prediction(const PredictionFile& pred, const MergeOptions& options) {
    if (options.method == MergeMethod::Chains) {
        if (!pred.has_scores()) {
            throw ArgumentError("chain merging needs a score matrix in the prediction");
        }
        if (pred.scores.n != pred.boxes.size()) {
            throw ArgumentError("score matrix size does not match the box count");
        }
    } else if (!pred.has_embeddings()) {
        throw ArgumentError("cosine merging needs embeddings in the prediction");
    }

    MergeResult result;
    if (options.apply_containment_filter) {
        result.kept = containment_filter(pred.boxes);
    } else {
        result.kept.resize(pred.boxes.size());
        std::iota(result.kept.begin(), result.kept.end(), std::size_t(0));
    }
    const std::size_t m = result.kept.size();

    std::vector<std::vector<std::size_t>> groups; // indices into result.kept
    if (options.method == MergeMethod::Chains) {
        ScoreMatrix sub;
        sub.n = m;
        sub.values.resize(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                sub.at(i, j) = pred.scores.at(result.kept[i], result.kept[j]);
            }
        }
        groups = chains_from_scores(sub, options.exclude_diagonal);
    } else {
        std::vector<std::vector<double>> sub(m);
        for (std::size_t i = 0; i < m; ++i) sub[i] = pred.embeddings[result.kept[i]];
        groups = cosine_merge(sub, options.cosine_threshold);
    }

    result.output.page_id = pred.page_id;
    for (std::size_t i = 0; i < m; ++i) {
        result.output.boxes.push_back(pred.boxes[result.kept[i]]);
        if (pred.has_classes()) result.output.classes.push_back(pred.classes[result.kept[i]]);
    }

    for (const auto& group : groups) {
        std::vector<std::size_t> original(group.size());
        for (std::size_t k = 0; k < group.size(); ++k) original[k] = result.kept[group[k]];
        result.groups.push_back(std::move(original));

        // Chain the members in reading order so the relations trace the
        // group top-to-bottom, left-to-right.
        std::vector<std::size_t> ordered = group;
        std::sort(ordered.begin(), ordered.end(), [&](std::size_t lhs, std::size_t rhs) {
            const BBox& a = result.output.boxes[lhs];
            const BBox& b = result.output.boxes[rhs];
            if (a.y != b.y) return a.y < b.y;
            if (a.x != b.x) return a.x < b.x;
            return lhs < rhs;
        });
        for (std::size_t k = 1; k < ordered.size(); ++k) {
            result.output.relations.emplace_back(ordered[k - 1], ordered[k]);
        }
    }
    return result;
}

} // namespace segbite
