#pragma once

#include "segbite/geometry.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace segbite {

/// Square matrix of relation scores; s(i, j) scores a link from box i to
/// box j.
struct ScoreMatrix {
    std::size_t n = 0;
    std::vector<double> values; // row-major, n*n

    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }

    bool valid() const { return values.size() == n * n; }
};

/// Exchange format for one page of an external model's outputs: detected
/// boxes plus whichever of relations, relation scores and node embeddings
/// the model produces.
struct PredictionFile {
    std::string page_id;
    std::vector<BBox> boxes;
    std::vector<std::string> classes;                    // optional, per box
    std::vector<std::pair<std::size_t, std::size_t>> relations; // optional, box indices
    ScoreMatrix scores;                                  // optional, n == 0 when absent
    std::vector<std::vector<double>> embeddings;         // optional, one row per box

    bool has_classes() const { return !classes.empty(); }
    bool has_relations() const { return !relations.empty(); }
    bool has_scores() const { return scores.n > 0; }
    bool has_embeddings() const { return !embeddings.empty(); }
};

/// Schema per page:
///   {"page_id": str, "boxes": [[x,y,w,h], ...], "classes": [str, ...]?,
///    "relations": [[i, j], ...]?, "scores": [[...], ...]?,
///    "embeddings": [[...], ...]?}
/// where i, j index `boxes`. Throws ParseError on bad JSON, ValidationError
/// when a shape invariant is violated (non-square scores, embedding row
/// count mismatch, relation index out of range).
PredictionFile parse_prediction(std::string_view bytes);

std::string write_prediction(const PredictionFile& pred);

} // namespace segbite
