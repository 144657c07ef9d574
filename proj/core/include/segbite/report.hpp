#pragma once

#include "segbite/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace segbite {

/// Everything a run needs to be reproduced, echoed into every report.
struct EvalConfig {
    MissingPolicy missing_policy = MissingPolicy::ExtraCluster;
    Aggregation aggregation = Aggregation::Macro;
    int bootstrap_replicates = 0; // 0 = no CI
    double alpha = 0.05;
    std::uint64_t seed = 0;

    friend bool operator==(const EvalConfig&, const EvalConfig&) = default;
};

struct EvalReport {
    static constexpr int kSchemaVersion = 1;

    EvalConfig config;
    std::vector<PageScore> pages;          // sorted by page_id
    std::vector<std::string> skipped;      // pages with < 2 gt foreground pixels
    double score = 0.0;                    // aggregate over scored pages
    std::optional<BootstrapResult> ci;     // present when replicates > 0
};

const char* missing_policy_name(MissingPolicy policy);
const char* aggregation_name(Aggregation aggregation);
MissingPolicy missing_policy_from_name(const std::string& name);
Aggregation aggregation_from_name(const std::string& name);

/// Deterministic JSON rendering (fixed key order, shortest round-trip
/// floats). Byte-identical for identical inputs regardless of thread
/// count or platform.
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(const std::string& text);

/// Human-readable summary table.
std::string report_to_text(const EvalReport& report);

} // namespace segbite
