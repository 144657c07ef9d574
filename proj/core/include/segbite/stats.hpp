#pragma once

#include "segbite/segmodel.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace segbite {

/// Counts for one named subset of the corpus.
struct SplitStats {
    std::int64_t pages = 0;
    std::int64_t title = 0;
    std::int64_t text = 0;
    std::int64_t page_number = 0;
    std::int64_t relations = 0;
    std::int64_t segments = 0;

    std::int64_t regions() const { return title + text + page_number; }
};

/// Five-number-free summary of a per-page count: min/max, mean, median.
struct Distribution {
    std::int64_t min = 0;
    std::int64_t max = 0;
    double mean = 0.0;
    double median = 0.0;

    static Distribution from(std::vector<std::int64_t> values);
};

struct CorpusStats {
    SplitStats overall;
    std::vector<std::pair<std::string, SplitStats>> splits; // sorted by name
    Distribution regions_per_page;
    Distribution segments_per_page;
    std::optional<Distribution> textlines_per_page;
    std::int64_t min_width = 0, max_width = 0;
    std::int64_t min_height = 0, max_height = 0;
};

/// JSON object {"page_id": "split-name", ...}. Unlisted pages fall into
/// the synthetic split "unassigned".
std::map<std::string, std::string> parse_split_manifest(std::string_view bytes);

/// Region/relation/segment census over annotated pages. Segments are the
/// relation components as annotated (no title filtering applied).
/// `split_of` adds a per-split breakdown; `textlines_per_page` (page_id ->
/// line count) adds the OCR distribution.
CorpusStats compute_stats(const std::vector<AnnotatedPage>& pages,
                          const std::map<std::string, std::string>* split_of = nullptr,
                          const std::map<std::string, std::int64_t>* textlines_per_page = nullptr);

std::string stats_to_json(const CorpusStats& stats);
std::string stats_to_text(const CorpusStats& stats);

} // namespace segbite
