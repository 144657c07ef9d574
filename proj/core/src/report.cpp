#include "segbite/report.hpp"

#include "segbite/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace segbite {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_score(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

const char* missing_policy_name(MissingPolicy policy) {
    return policy == MissingPolicy::ExtraCluster ? "extra-cluster" : "singletons";
}

const char* aggregation_name(Aggregation aggregation) {
    return aggregation == Aggregation::Macro ? "macro" : "pixel";
}

MissingPolicy missing_policy_from_name(const std::string& name) {
    if (name == "extra-cluster") return MissingPolicy::ExtraCluster;
    if (name == "singletons") return MissingPolicy::Singletons;
    throw ArgumentError("unknown missing-pixel policy '" + name +
                        "' (expected extra-cluster or singletons)");
}

Aggregation aggregation_from_name(const std::string& name) {
    if (name == "macro") return Aggregation::Macro;
    if (name == "pixel") return Aggregation::PixelWeighted;
    throw ArgumentError("unknown aggregation '" + name + "' (expected macro or pixel)");
}

std::string report_to_json(const EvalReport& report) {
    ordered_json j;
    j["schema_version"] = EvalReport::kSchemaVersion;

    ordered_json cfg;
    cfg["missing_policy"] = missing_policy_name(report.config.missing_policy);
    cfg["aggregation"] = aggregation_name(report.config.aggregation);
    cfg["bootstrap_replicates"] = report.config.bootstrap_replicates;
    cfg["alpha"] = report.config.alpha;
    cfg["seed"] = report.config.seed;
    j["config"] = cfg;

    j["score"] = report.score;
    if (report.ci) {
        ordered_json ci;
        ci["low"] = report.ci->low;
        ci["high"] = report.ci->high;
        j["ci"] = ci;
    } else {
        j["ci"] = nullptr;
    }

    j["pages_scored"] = report.pages.size();
    j["pages_skipped"] = report.skipped.size();

    ordered_json pages = ordered_json::array();
    for (const auto& p : report.pages) {
        ordered_json e;
        e["page_id"] = p.page_id;
        e["rand_index"] = p.rand_index;
        e["foreground_pixels"] = p.foreground_pixels;
        pages.push_back(std::move(e));
    }
    j["pages"] = std::move(pages);

    ordered_json skipped = ordered_json::array();
    for (const auto& s : report.skipped) skipped.push_back(s);
    j["skipped"] = std::move(skipped);

    return j.dump(2) + "\n";
}

EvalReport report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int>() != EvalReport::kSchemaVersion) {
            throw FormatError("unsupported report schema version");
        }
        EvalReport report;
        const auto& cfg = j.at("config");
        report.config.missing_policy =
            missing_policy_from_name(cfg.at("missing_policy").get<std::string>());
        report.config.aggregation =
            aggregation_from_name(cfg.at("aggregation").get<std::string>());
        report.config.bootstrap_replicates = cfg.at("bootstrap_replicates").get<int>();
        report.config.alpha = cfg.at("alpha").get<double>();
        report.config.seed = cfg.at("seed").get<std::uint64_t>();
        report.score = j.at("score").get<double>();
        if (!j.at("ci").is_null()) {
            BootstrapResult ci;
            ci.low = j.at("ci").at("low").get<double>();
            ci.high = j.at("ci").at("high").get<double>();
            ci.point = report.score;
            report.ci = ci;
        }
        for (const auto& e : j.at("pages")) {
            PageScore p;
            p.page_id = e.at("page_id").get<std::string>();
            p.rand_index = e.at("rand_index").get<double>();
            p.foreground_pixels = e.at("foreground_pixels").get<std::uint64_t>();
            report.pages.push_back(std::move(p));
        }
        for (const auto& s : j.at("skipped")) {
            report.skipped.push_back(s.get<std::string>());
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed report: ") + e.what());
    }
}

std::string report_to_text(const EvalReport& report) {
    std::ostringstream out;
    out << "rand index (" << aggregation_name(report.config.aggregation)
        << ", missing=" << missing_policy_name(report.config.missing_policy)
        << "): " << format_score(report.score) << "\n";
    if (report.ci) {
        out << "  " << (1.0 - report.config.alpha) * 100.0 << "% CI ["
            << format_score(report.ci->low) << ", " << format_score(report.ci->high)
            << "]  (bootstrap, " << report.config.bootstrap_replicates
            << " replicates, seed " << report.config.seed << ")\n";
    }
    out << "  pages scored: " << report.pages.size()
        << ", skipped: " << report.skipped.size() << "\n";

    if (!report.pages.empty()) {
        std::size_t width = 7; // "page_id"
        for (const auto& p : report.pages) width = std::max(width, p.page_id.size());
        out << "\n";
        out << "  page_id";
        for (std::size_t i = 7; i < width; ++i) out << ' ';
        out << "  rand_index  fg_pixels\n";
        for (const auto& p : report.pages) {
            out << "  " << p.page_id;
            for (std::size_t i = p.page_id.size(); i < width; ++i) out << ' ';
            out << "  " << format_score(p.rand_index) << "    " << p.foreground_pixels << "\n";
        }
    }
    if (!report.skipped.empty()) {
        out << "\n  skipped (fewer than 2 foreground pixels):\n";
        for (const auto& s : report.skipped) out << "    " << s << "\n";
    }
    return out.str();
}

} // namespace segbite
