#include "segbite/prediction.hpp"

#include "input_guards.hpp"
#include "segbite/errors.hpp"

#include <json.hpp>

#include <cmath>

namespace segbite {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

int round_half_up(double v) {
    return int(std::floor(v + 0.5));
}

} // namespace

PredictionFile parse_prediction(std::string_view bytes) {
    detail::guard_json_depth(bytes);
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("prediction: ") + e.what() + " (byte " +
                         std::to_string(e.byte) + ")");
    }
    if (!doc.is_object()) {
        throw ParseError("prediction: top level must be an object");
    }

    PredictionFile out;
    if (const auto it = doc.find("page_id"); it != doc.end() && it->is_string()) {
        out.page_id = it->get<std::string>();
    }

    const auto boxes = doc.find("boxes");
    if (boxes == doc.end() || !boxes->is_array()) {
        throw ParseError("prediction: missing 'boxes' array");
    }
    out.boxes.reserve(boxes->size());
    for (const auto& b : *boxes) {
        if (!b.is_array() || b.size() != 4) {
            throw ParseError("prediction: each box must be [x, y, w, h]");
        }
        out.boxes.push_back(BBox{round_half_up(b[0].get<double>()),
                                 round_half_up(b[1].get<double>()),
                                 round_half_up(b[2].get<double>()),
                                 round_half_up(b[3].get<double>())});
    }
    const std::size_t n = out.boxes.size();

    if (const auto it = doc.find("classes"); it != doc.end() && !it->is_null()) {
        if (!it->is_array() || it->size() != n) {
            throw ValidationError("prediction: 'classes' must list one entry per box");
        }
        for (const auto& c : *it) {
            out.classes.push_back(c.get<std::string>());
        }
    }

    if (const auto it = doc.find("relations"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) {
            throw ParseError("prediction: 'relations' must be an array of [i, j] pairs");
        }
        for (const auto& r : *it) {
            if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
                !r[1].is_number_integer()) {
                throw ParseError("prediction: relation entries must be [i, j] index pairs");
            }
            const auto i = r[0].get<std::int64_t>();
            const auto j = r[1].get<std::int64_t>();
            if (i < 0 || j < 0 || std::size_t(i) >= n || std::size_t(j) >= n) {
                throw ValidationError("prediction: relation index out of range: [" +
                                      std::to_string(i) + ", " + std::to_string(j) + "]");
            }
            out.relations.emplace_back(std::size_t(i), std::size_t(j));
        }
    }

    if (const auto it = doc.find("scores"); it != doc.end() && !it->is_null()) {
        if (!it->is_array() || it->size() != n) {
            throw ValidationError("prediction: 'scores' must be a square " + std::to_string(n) +
                                  "x" + std::to_string(n) + " matrix");
        }
        out.scores.n = n;
        out.scores.values.reserve(n * n);
        for (const auto& row : *it) {
            if (!row.is_array() || row.size() != n) {
                throw ValidationError("prediction: 'scores' rows must have length " +
                                      std::to_string(n));
            }
            for (const auto& v : row) {
                out.scores.values.push_back(v.get<double>());
            }
        }
    }

    if (const auto it = doc.find("embeddings"); it != doc.end() && !it->is_null()) {
        if (!it->is_array() || it->size() != n) {
            throw ValidationError("prediction: 'embeddings' must have one row per box");
        }
        std::size_t dim = 0;
        for (const auto& row : *it) {
            if (!row.is_array()) {
                throw ParseError("prediction: embedding rows must be arrays");
            }
            std::vector<double> v;
            v.reserve(row.size());
            for (const auto& e : row) {
                v.push_back(e.get<double>());
            }
            if (dim == 0) {
                dim = v.size();
            } else if (v.size() != dim) {
                throw ValidationError("prediction: embedding rows differ in dimension");
            }
            out.embeddings.push_back(std::move(v));
        }
    }

    return out;
}

std::string write_prediction(const PredictionFile& pred) {
    ordered_json doc;
    doc["page_id"] = pred.page_id;
    auto boxes = ordered_json::array();
    for (const auto& b : pred.boxes) {
        boxes.push_back({b.x, b.y, b.w, b.h});
    }
    doc["boxes"] = std::move(boxes);
    if (pred.has_classes()) {
        doc["classes"] = pred.classes;
    }
    if (pred.has_relations()) {
        auto rels = ordered_json::array();
        for (const auto& [i, j] : pred.relations) {
            rels.push_back({i, j});
        }
        doc["relations"] = std::move(rels);
    }
    if (pred.has_scores()) {
        auto rows = ordered_json::array();
        for (std::size_t i = 0; i < pred.scores.n; ++i) {
            auto row = ordered_json::array();
            for (std::size_t j = 0; j < pred.scores.n; ++j) {
                row.push_back(pred.scores.at(i, j));
            }
            rows.push_back(std::move(row));
        }
        doc["scores"] = std::move(rows);
    }
    if (pred.has_embeddings()) {
        doc["embeddings"] = pred.embeddings;
    }
    return doc.dump(2);
}

} // namespace segbite
