#include "segbite/stats.hpp"

#include "segbite/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace segbite {
namespace {

using ordered_json = nlohmann::ordered_json;

void count_page(SplitStats& s, const AnnotatedPage& page, std::size_t segment_count) {
    s.pages += 1;
    for (const auto& region : page.regions) {
        switch (region.cls) {
        case RegionClass::Title: s.title += 1; break;
        case RegionClass::Text: s.text += 1; break;
        case RegionClass::PageNumber: s.page_number += 1; break;
        }
    }
    s.relations += std::int64_t(page.relations.size());
    s.segments += std::int64_t(segment_count);
}

ordered_json split_to_json(const SplitStats& s) {
    ordered_json j;
    j["pages"] = s.pages;
    j["title"] = s.title;
    j["text"] = s.text;
    j["page_number"] = s.page_number;
    j["regions"] = s.regions();
    j["relations"] = s.relations;
    j["segments"] = s.segments;
    return j;
}

ordered_json dist_to_json(const Distribution& d) {
    ordered_json j;
    j["min"] = d.min;
    j["max"] = d.max;
    j["mean"] = d.mean;
    j["median"] = d.median;
    return j;
}

std::string format2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

Distribution Distribution::from(std::vector<std::int64_t> values) {
    Distribution d;
    if (values.empty()) return d;
    std::sort(values.begin(), values.end());
    d.min = values.front();
    d.max = values.back();
    std::int64_t sum = 0;
    for (auto v : values) sum += v;
    d.mean = double(sum) / double(values.size());
    const std::size_t n = values.size();
    d.median = n % 2 == 1 ? double(values[n / 2])
                          : (double(values[n / 2 - 1]) + double(values[n / 2])) / 2.0;
    return d;
}

std::map<std::string, std::string> parse_split_manifest(std::string_view bytes) {
    ordered_json j;
    try {
        j = ordered_json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid split manifest JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw FormatError("split manifest must be a JSON object of page_id -> split");
    }
    std::map<std::string, std::string> out;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string()) {
            throw FormatError("split manifest entry '" + key + "' is not a string");
        }
        out[key] = value.get<std::string>();
    }
    return out;
}

CorpusStats compute_stats(const std::vector<AnnotatedPage>& pages,
                          const std::map<std::string, std::string>* split_of,
                          const std::map<std::string, std::int64_t>* textlines_per_page) {
    CorpusStats stats;
    std::map<std::string, SplitStats> splits;
    std::vector<std::int64_t> regions_pp;
    std::vector<std::int64_t> segments_pp;
    std::vector<std::int64_t> lines_pp;

    bool first = true;
    for (const auto& page : pages) {
        const std::size_t segment_count = segments_from_relations(page).segments.size();
        count_page(stats.overall, page, segment_count);
        if (split_of) {
            auto it = split_of->find(page.page_id);
            const std::string name = it != split_of->end() ? it->second : "unassigned";
            count_page(splits[name], page, segment_count);
        }
        regions_pp.push_back(std::int64_t(page.regions.size()));
        segments_pp.push_back(std::int64_t(segment_count));
        if (textlines_per_page) {
            auto it = textlines_per_page->find(page.page_id);
            lines_pp.push_back(it != textlines_per_page->end() ? it->second : 0);
        }

        if (first) {
            stats.min_width = stats.max_width = page.size.width;
            stats.min_height = stats.max_height = page.size.height;
            first = false;
        } else {
            stats.min_width = std::min<std::int64_t>(stats.min_width, page.size.width);
            stats.max_width = std::max<std::int64_t>(stats.max_width, page.size.width);
            stats.min_height = std::min<std::int64_t>(stats.min_height, page.size.height);
            stats.max_height = std::max<std::int64_t>(stats.max_height, page.size.height);
        }
    }

    for (auto& [name, s] : splits) stats.splits.emplace_back(name, s);
    stats.regions_per_page = Distribution::from(std::move(regions_pp));
    stats.segments_per_page = Distribution::from(std::move(segments_pp));
    if (textlines_per_page) {
        stats.textlines_per_page = Distribution::from(std::move(lines_pp));
    }
    return stats;
}

std::string stats_to_json(const CorpusStats& stats) {
    ordered_json j;
    j["overall"] = split_to_json(stats.overall);
    if (!stats.splits.empty()) {
        ordered_json splits;
        for (const auto& [name, s] : stats.splits) splits[name] = split_to_json(s);
        j["splits"] = std::move(splits);
    }
    j["regions_per_page"] = dist_to_json(stats.regions_per_page);
    j["segments_per_page"] = dist_to_json(stats.segments_per_page);
    if (stats.textlines_per_page) {
        j["textlines_per_page"] = dist_to_json(*stats.textlines_per_page);
    }
    ordered_json dims;
    dims["min_width"] = stats.min_width;
    dims["max_width"] = stats.max_width;
    dims["min_height"] = stats.min_height;
    dims["max_height"] = stats.max_height;
    j["image_dimensions"] = std::move(dims);
    return j.dump(2) + "\n";
}

std::string stats_to_text(const CorpusStats& stats) {
    std::ostringstream out;
    auto row = [&](const std::string& name, const SplitStats& s) {
        out << "  " << name << ": " << s.pages << " pages, "
            << s.regions() << " regions (title " << s.title << ", text " << s.text
            << ", page-number " << s.page_number << "), " << s.relations
            << " relations, " << s.segments << " segments\n";
    };
    out << "corpus:\n";
    row("overall", stats.overall);
    for (const auto& [name, s] : stats.splits) row(name, s);

    auto dist = [&](const std::string& name, const Distribution& d) {
        out << "  " << name << ": min " << d.min << ", max " << d.max << ", mean "
            << format2(d.mean) << ", median " << format2(d.median) << "\n";
    };
    out << "per page:\n";
    dist("regions", stats.regions_per_page);
    dist("segments", stats.segments_per_page);
    if (stats.textlines_per_page) dist("textlines", *stats.textlines_per_page);

    out << "image dimensions: width " << stats.min_width << ".." << stats.max_width
        << ", height " << stats.min_height << ".." << stats.max_height << "\n";
    return out.str();
}

} // namespace segbite
