// segbite — command line front end for the page segmentation toolkit.
//
// Subcommands:
//   build-mask  annotations + images + OCR -> ground-truth label maps
//   evaluate    gt label maps vs predictions -> Rand index report
//   merge       raw detections -> filtered, grouped prediction file
//   stats       corpus census over an annotation file
//   validate    invariant check over annotations / prediction files
//
// Exit codes: 0 success, 2 invalid input or failed validation, 3 I/O error.
// Every documented flag can also be set through the environment with the
// SEGBITE_ prefix (e.g. SEGBITE_WINDOW=151); explicit flags win.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "segbite/alto.hpp"
#include "segbite/coco.hpp"
#include "segbite/errors.hpp"
#include "segbite/image.hpp"
#include "segbite/label_map.hpp"
#include "segbite/merge.hpp"
#include "segbite/metrics.hpp"
#include "segbite/page_xml.hpp"
#include "segbite/parallel.hpp"
#include "segbite/prediction.hpp"
#include "segbite/rasterize.hpp"
#include "segbite/report.hpp"
#include "segbite/segmodel.hpp"
#include "segbite/stats.hpp"
#include "segbite/threshold.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace segbite;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

std::string read_text(const std::string& path) {
    const auto bytes = read_file(path);
    return std::string(bytes.begin(), bytes.end());
}

void write_text(const std::string& path, const std::string& text) {
    write_file(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

std::vector<TextLine> load_ocr_lines(const std::string& path, const std::string& format) {
    const std::string text = read_text(path);
    if (format == "pagexml") {
        return parse_pagexml(text).lines;
    }
    std::vector<TextLine> lines;
    for (auto& word : parse_alto(text)) {
        lines.push_back(TextLine{std::move(word.polygon), std::move(word.text), std::nullopt});
    }
    return lines;
}

/// Sorted page ids for every file with the given extension in a directory.
std::vector<std::string> list_page_ids(const std::string& dir, const std::string& ext) {
    if (!fs::is_directory(dir)) {
        throw IoError("not a directory: " + dir);
    }
    std::vector<std::string> ids;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ext) {
            ids.push_back(entry.path().stem().string());
        }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

// ---------------------------------------------------------------------------
// build-mask

struct BuildMaskConfig {
    std::string coco_path;
    std::string images_dir;
    std::string ocr_dir;
    std::string ocr_format = "pagexml";
    std::string out_dir;
    int window = 301;
    double bias = 10.0;
    bool invert = false;
    bool overlay = false;
    int jobs = 1;
};

int cmd_build_mask(const BuildMaskConfig& cfg) {
    const CocoDocument doc = parse_coco(read_text(cfg.coco_path));
    const std::vector<AnnotatedPage> pages = pages_from_coco(doc);

    std::map<std::string, std::string> image_file_of;
    for (const auto& img : doc.images) {
        image_file_of[page_id_from_file_name(img.file_name)] = img.file_name;
    }

    fs::create_directories(cfg.out_dir);

    struct PageOutcome {
        std::string page_id;
        std::string status; // ok | skipped | failed
        std::string detail; // reason or error
        std::string label_map;
        std::uint64_t foreground = 0;
        std::size_t segments = 0;
        std::vector<std::string> warnings;
    };
    std::vector<PageOutcome> outcomes(pages.size());

    parallel_for(pages.size(), cfg.jobs, [&](std::size_t i) {
        const AnnotatedPage& page = pages[i];
        PageOutcome& out = outcomes[i];
        out.page_id = page.page_id;

        const fs::path image_path = fs::path(cfg.images_dir) / image_file_of.at(page.page_id);
        const fs::path ocr_path = fs::path(cfg.ocr_dir) / (page.page_id + ".xml");
        if (!fs::is_regular_file(image_path)) {
            out.status = "skipped";
            out.detail = "missing page image " + image_path.string();
            return;
        }
        if (!fs::is_regular_file(ocr_path)) {
            out.status = "skipped";
            out.detail = "missing OCR file " + ocr_path.string();
            return;
        }
        try {
            const GrayImage img = load_gray_image(image_path.string());
            if (img.size != page.size) {
                throw ValidationError("image is " + std::to_string(img.size.width) + "x" +
                                      std::to_string(img.size.height) + " but the annotation says " +
                                      std::to_string(page.size.width) + "x" +
                                      std::to_string(page.size.height));
            }
            const BinaryMask mask = adaptive_threshold(img, cfg.window, cfg.bias, cfg.invert);

            std::vector<TextLine> lines;
            if (cfg.ocr_format == "pagexml") {
                auto parsed = parse_pagexml(read_text(ocr_path.string()));
                lines = std::move(parsed.lines);
                out.warnings = std::move(parsed.warnings);
            } else {
                lines = load_ocr_lines(ocr_path.string(), cfg.ocr_format);
            }

            const AnnotatedPage filtered = drop_enclosed_titles(page);
            const Segmentation seg = segments_from_relations(filtered);
            const LabelMap label = build_label_map(filtered, seg, lines, mask);

            const fs::path out_path = fs::path(cfg.out_dir) / (page.page_id + ".png");
            save_label_map(label, out_path.string());
            if (cfg.overlay) {
                const fs::path overlay_path =
                    fs::path(cfg.out_dir) / (page.page_id + "_overlay.png");
                save_label_overlay(label, overlay_path.string());
            }

            std::uint64_t foreground = 0;
            for (const auto& [lbl, count] : foreground_census(label)) foreground += count;
            out.status = "ok";
            out.label_map = out_path.filename().string();
            out.foreground = foreground;
            out.segments = seg.segments.size();
        } catch (const std::exception& e) {
            out.status = "failed";
            out.detail = e.what();
        }
    });

    ordered_json manifest;
    manifest["schema_version"] = 1;
    ordered_json jcfg;
    jcfg["window"] = cfg.window;
    jcfg["bias"] = cfg.bias;
    jcfg["invert_polarity"] = cfg.invert;
    jcfg["ocr"] = cfg.ocr_format;
    manifest["config"] = std::move(jcfg);

    ordered_json jpages = ordered_json::array();
    ordered_json jskipped = ordered_json::array();
    ordered_json jfailed = ordered_json::array();
    bool any_failed = false;
    for (const auto& out : outcomes) {
        if (out.status == "ok") {
            ordered_json row;
            row["page_id"] = out.page_id;
            row["label_map"] = out.label_map;
            row["foreground_pixels"] = out.foreground;
            row["segments"] = out.segments;
            if (!out.warnings.empty()) row["warnings"] = out.warnings;
            jpages.push_back(std::move(row));
        } else if (out.status == "skipped") {
            ordered_json row;
            row["page_id"] = out.page_id;
            row["reason"] = out.detail;
            jskipped.push_back(std::move(row));
            std::cerr << "skipped " << out.page_id << ": " << out.detail << "\n";
        } else {
            ordered_json row;
            row["page_id"] = out.page_id;
            row["error"] = out.detail;
            jfailed.push_back(std::move(row));
            std::cerr << "failed " << out.page_id << ": " << out.detail << "\n";
            any_failed = true;
        }
    }
    manifest["pages"] = std::move(jpages);
    manifest["skipped"] = std::move(jskipped);
    manifest["failed"] = std::move(jfailed);

    const fs::path manifest_path = fs::path(cfg.out_dir) / "manifest.json";
    write_text(manifest_path.string(), manifest.dump(2) + "\n");

    std::cout << "wrote " << manifest["pages"].size() << " label maps to " << cfg.out_dir
              << " (" << manifest["skipped"].size() << " skipped, "
              << manifest["failed"].size() << " failed)\n";
    return any_failed ? kExitInvalid : kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateConfig {
    std::string gt_dir;
    std::string pred_dir;
    std::string report_path;
    std::string missing_policy = "extra-cluster";
    std::string aggregation = "macro";
    int bootstrap = 0;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    int jobs = 1;
    // Needed only when the prediction directory holds PredictionFile JSON
    // instead of label maps: the boxes are rasterized against the same
    // image mask and textlines the ground truth used.
    std::string images_dir;
    std::string ocr_dir;
    std::string ocr_format = "pagexml";
    int window = 301;
    double bias = 10.0;
    bool invert = false;
};

fs::path find_page_image(const std::string& images_dir, const std::string& page_id) {
    static const char* kExtensions[] = {".png", ".jpg", ".jpeg", ".PNG", ".JPG", ".JPEG"};
    for (const char* ext : kExtensions) {
        fs::path candidate = fs::path(images_dir) / (page_id + ext);
        if (fs::is_regular_file(candidate)) return candidate;
    }
    throw IoError("no page image for " + page_id + " under " + images_dir);
}

/// Turns a detection file into a label map on the ground-truth pixel grid:
/// segments from the relations, boxes rasterized against the page's own
/// binary mask. Textlines restrict the foreground further when OCR is
/// available; without OCR every mask pixel inside a box counts.
LabelMap rasterize_prediction(const PredictionFile& pred, const Size& size,
                              const EvaluateConfig& cfg, const std::string& page_id) {
    if (cfg.images_dir.empty()) {
        throw ArgumentError("prediction " + page_id +
                            " is a detection file; rasterizing it needs --images");
    }
    const GrayImage img = load_gray_image(find_page_image(cfg.images_dir, page_id).string());
    if (img.size != size) {
        throw ValidationError("page image for " + page_id + " is " +
                              std::to_string(img.size.width) + "x" +
                              std::to_string(img.size.height) +
                              " but the ground-truth map is " + std::to_string(size.width) +
                              "x" + std::to_string(size.height));
    }
    const BinaryMask mask = adaptive_threshold(img, cfg.window, cfg.bias, cfg.invert);

    std::vector<TextLine> lines;
    if (!cfg.ocr_dir.empty()) {
        const fs::path ocr_path = fs::path(cfg.ocr_dir) / (page_id + ".xml");
        lines = load_ocr_lines(ocr_path.string(), cfg.ocr_format);
    } else {
        // Whole page as one "line": no textline restriction.
        lines.push_back(TextLine{Polygon::from_bbox(BBox{0, 0, size.width, size.height}), "",
                                 std::nullopt});
    }

    AnnotatedPage page;
    page.page_id = page_id;
    page.size = size;
    for (std::size_t i = 0; i < pred.boxes.size(); ++i) {
        page.regions.push_back(Region{std::int64_t(i), pred.boxes[i], RegionClass::Text});
    }
    for (const auto& [from, to] : pred.relations) {
        page.relations.push_back(Relation{std::int64_t(from), std::int64_t(to)});
    }
    const Segmentation seg = segments_from_relations(page);
    return build_label_map(page, seg, lines, mask);
}

int cmd_evaluate(const EvaluateConfig& cfg) {
    const std::vector<std::string> page_ids = list_page_ids(cfg.gt_dir, ".png");
    if (page_ids.empty()) {
        throw ArgumentError("no ground-truth label maps (*.png) under " + cfg.gt_dir);
    }
    if (!fs::is_directory(cfg.pred_dir)) {
        throw IoError("not a directory: " + cfg.pred_dir);
    }

    const MissingPolicy policy = missing_policy_from_name(cfg.missing_policy);
    const Aggregation aggregation = aggregation_from_name(cfg.aggregation);

    struct PageOutcome {
        std::optional<PageScore> score;
        bool skipped = false;
        bool matched = false; // a prediction file existed
    };
    std::vector<PageOutcome> outcomes(page_ids.size());

    parallel_for(page_ids.size(), cfg.jobs, [&](std::size_t i) {
        const std::string& id = page_ids[i];
        const LabelMap gt = load_label_map((fs::path(cfg.gt_dir) / (id + ".png")).string());

        LabelMap pred;
        const fs::path png_path = fs::path(cfg.pred_dir) / (id + ".png");
        const fs::path json_path = fs::path(cfg.pred_dir) / (id + ".json");
        if (fs::is_regular_file(png_path)) {
            pred = load_label_map(png_path.string());
            outcomes[i].matched = true;
        } else if (fs::is_regular_file(json_path)) {
            pred = rasterize_prediction(parse_prediction(read_text(json_path.string())),
                                        gt.size, cfg, id);
            outcomes[i].matched = true;
        } else {
            // Missing page: every ground-truth pixel is unassigned and
            // falls under the missing-pixel policy.
            pred.size = gt.size;
            pred.labels.assign(gt.labels.size(), 0);
        }

        if (auto result = evaluate_page(gt, pred, policy)) {
            outcomes[i].score = PageScore{id, result->first, result->second};
        } else {
            outcomes[i].skipped = true;
        }
    });

    if (std::none_of(outcomes.begin(), outcomes.end(),
                     [](const PageOutcome& o) { return o.matched; })) {
        throw ArgumentError("no page id under " + cfg.pred_dir +
                            " matches the ground truth (nothing to evaluate)");
    }

    EvalReport report;
    report.config.missing_policy = policy;
    report.config.aggregation = aggregation;
    report.config.bootstrap_replicates = cfg.bootstrap;
    report.config.alpha = cfg.alpha;
    report.config.seed = cfg.seed;
    for (std::size_t i = 0; i < page_ids.size(); ++i) {
        if (outcomes[i].score) {
            report.pages.push_back(*outcomes[i].score);
        } else if (outcomes[i].skipped) {
            report.skipped.push_back(page_ids[i]);
        }
    }
    if (report.pages.empty()) {
        throw UndefinedMetricError("every page was skipped; nothing to score");
    }
    report.score = aggregate_scores(report.pages, aggregation);
    if (cfg.bootstrap > 0 && report.pages.size() >= 2) {
        report.ci = bootstrap_ci(report.pages, cfg.bootstrap, cfg.alpha, cfg.seed, aggregation);
    }

    std::cout << report_to_text(report);
    if (!cfg.report_path.empty()) {
        write_text(cfg.report_path, report_to_json(report));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// merge

struct MergeConfig {
    std::string pred_path; // file or directory
    std::string out_path;  // file or directory, matching pred_path
    std::string method = "chains";
    double cosine_threshold = 0.5;
    bool exclude_diagonal = false;
    bool no_containment_filter = false;
    int jobs = 1;
};

MergeOptions merge_options_from(const MergeConfig& cfg) {
    MergeOptions options;
    if (cfg.method == "chains") {
        options.method = MergeMethod::Chains;
    } else if (cfg.method == "cosine") {
        options.method = MergeMethod::Cosine;
    } else {
        throw ArgumentError("unknown merge method '" + cfg.method +
                            "' (expected chains or cosine)");
    }
    options.apply_containment_filter = !cfg.no_containment_filter;
    options.exclude_diagonal = cfg.exclude_diagonal;
    options.cosine_threshold = cfg.cosine_threshold;
    return options;
}

int cmd_merge(const MergeConfig& cfg) {
    const MergeOptions options = merge_options_from(cfg);

    if (fs::is_directory(cfg.pred_path)) {
        const std::vector<std::string> ids = list_page_ids(cfg.pred_path, ".json");
        if (ids.empty()) {
            throw ArgumentError("no prediction files (*.json) under " + cfg.pred_path);
        }
        fs::create_directories(cfg.out_path);
        parallel_for(ids.size(), cfg.jobs, [&](std::size_t i) {
            const fs::path in = fs::path(cfg.pred_path) / (ids[i] + ".json");
            const MergeResult result =
                merge_prediction(parse_prediction(read_text(in.string())), options);
            const fs::path out = fs::path(cfg.out_path) / (ids[i] + ".json");
            write_text(out.string(), write_prediction(result.output));
        });
        std::cout << "merged " << ids.size() << " prediction files into " << cfg.out_path
                  << "\n";
        return kExitOk;
    }

    const MergeResult result =
        merge_prediction(parse_prediction(read_text(cfg.pred_path)), options);
    write_text(cfg.out_path, write_prediction(result.output));
    std::cout << "kept " << result.kept.size() << " boxes in " << result.groups.size()
              << " groups -> " << cfg.out_path << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

struct StatsConfig {
    std::string coco_path;
    std::string split_manifest;
    std::string ocr_dir;
    std::string ocr_format = "pagexml";
    std::string json_path;
};

int cmd_stats(const StatsConfig& cfg) {
    const std::vector<AnnotatedPage> pages = pages_from_coco(parse_coco(read_text(cfg.coco_path)));

    std::optional<std::map<std::string, std::string>> split_of;
    if (!cfg.split_manifest.empty()) {
        split_of = parse_split_manifest(read_text(cfg.split_manifest));
    }
    std::optional<std::map<std::string, std::int64_t>> lines_of;
    if (!cfg.ocr_dir.empty()) {
        lines_of.emplace();
        for (const auto& page : pages) {
            const fs::path ocr_path = fs::path(cfg.ocr_dir) / (page.page_id + ".xml");
            if (fs::is_regular_file(ocr_path)) {
                (*lines_of)[page.page_id] =
                    std::int64_t(load_ocr_lines(ocr_path.string(), cfg.ocr_format).size());
            }
        }
    }

    const CorpusStats stats =
        compute_stats(pages, split_of ? &*split_of : nullptr, lines_of ? &*lines_of : nullptr);
    std::cout << stats_to_text(stats);
    if (!cfg.json_path.empty()) {
        write_text(cfg.json_path, stats_to_json(stats));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateConfig {
    std::string coco_path;
    std::vector<std::string> pred_paths;
};

int cmd_validate(const ValidateConfig& cfg) {
    if (cfg.coco_path.empty() && cfg.pred_paths.empty()) {
        throw ArgumentError("validate needs --coco and/or --pred inputs");
    }
    std::size_t issues = 0;

    if (!cfg.coco_path.empty()) {
        try {
            const auto pages = pages_from_coco(parse_coco(read_text(cfg.coco_path)));
            for (const auto& page : pages) {
                for (const auto& d : validate_page(page)) {
                    std::cout << d.page_id << ": " << d.message << "\n";
                    ++issues;
                }
            }
        } catch (const IoError&) {
            throw;
        } catch (const std::exception& e) {
            std::cout << cfg.coco_path << ": " << e.what() << "\n";
            ++issues;
        }
    }

    for (const auto& path : cfg.pred_paths) {
        std::vector<std::string> files;
        if (fs::is_directory(path)) {
            for (const auto& id : list_page_ids(path, ".json")) {
                files.push_back((fs::path(path) / (id + ".json")).string());
            }
        } else {
            files.push_back(path);
        }
        for (const auto& file : files) {
            try {
                parse_prediction(read_text(file));
            } catch (const IoError&) {
                throw;
            } catch (const std::exception& e) {
                std::cout << file << ": " << e.what() << "\n";
                ++issues;
            }
        }
    }

    if (issues == 0) {
        std::cout << "ok\n";
        return kExitOk;
    }
    std::cout << issues << " issue(s) found\n";
    return kExitInvalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"segbite: logical page segmentation as foreground pixel clustering"};
    app.require_subcommand(1);

    BuildMaskConfig bm;
    auto* build_mask = app.add_subcommand(
        "build-mask", "Build ground-truth label maps from annotations, images and OCR");
    build_mask->add_option("--coco", bm.coco_path, "Annotation file (COCO with relations)")
        ->required();
    build_mask->add_option("--images", bm.images_dir, "Directory with the page images")
        ->required();
    build_mask->add_option("--ocr-dir", bm.ocr_dir, "Directory with per-page OCR XML")
        ->required();
    build_mask->add_option("--ocr", bm.ocr_format, "OCR format")
        ->check(CLI::IsMember({"pagexml", "alto"}))
        ->envname("SEGBITE_OCR");
    build_mask->add_option("--out", bm.out_dir, "Output directory for label maps + manifest")
        ->required();
    build_mask->add_option("--window", bm.window, "Adaptive threshold window (odd, >= 3)")
        ->envname("SEGBITE_WINDOW");
    build_mask->add_option("--bias", bm.bias, "Adaptive threshold bias")
        ->envname("SEGBITE_BIAS");
    build_mask->add_flag("--invert-polarity", bm.invert, "Light ink on dark ground")
        ->envname("SEGBITE_INVERT_POLARITY");
    build_mask->add_flag("--overlay", bm.overlay, "Also write color overlay PNGs (debug)");
    build_mask->add_option("--jobs", bm.jobs, "Worker threads")->envname("SEGBITE_JOBS");

    EvaluateConfig ev;
    auto* evaluate = app.add_subcommand(
        "evaluate", "Score predicted segmentations against ground-truth label maps");
    evaluate->add_option("--gt", ev.gt_dir, "Directory with ground-truth label maps (*.png)")
        ->required();
    evaluate->add_option("--pred", ev.pred_dir,
                         "Directory with predictions (*.png label maps or *.json detections)")
        ->required();
    evaluate->add_option("--report", ev.report_path, "Write the JSON report here");
    evaluate->add_option("--missing-policy", ev.missing_policy,
                         "Unlabeled ground-truth pixels: extra-cluster or singletons")
        ->check(CLI::IsMember({"extra-cluster", "singletons"}))
        ->envname("SEGBITE_MISSING_POLICY");
    evaluate->add_option("--aggregation", ev.aggregation, "macro or pixel")
        ->check(CLI::IsMember({"macro", "pixel"}))
        ->envname("SEGBITE_AGGREGATION");
    evaluate->add_option("--bootstrap", ev.bootstrap, "Bootstrap replicates (0 = no CI)")
        ->envname("SEGBITE_BOOTSTRAP");
    evaluate->add_option("--alpha", ev.alpha, "CI significance level")
        ->envname("SEGBITE_ALPHA");
    evaluate->add_option("--seed", ev.seed, "Bootstrap RNG seed")->envname("SEGBITE_SEED");
    evaluate->add_option("--jobs", ev.jobs, "Worker threads")->envname("SEGBITE_JOBS");
    evaluate->add_option("--images", ev.images_dir,
                         "Page images (required for *.json predictions)");
    evaluate->add_option("--ocr-dir", ev.ocr_dir,
                         "OCR XML for *.json predictions (optional textline restriction)");
    evaluate->add_option("--ocr", ev.ocr_format, "OCR format")
        ->check(CLI::IsMember({"pagexml", "alto"}))
        ->envname("SEGBITE_OCR");
    evaluate->add_option("--window", ev.window, "Adaptive threshold window for *.json predictions")
        ->envname("SEGBITE_WINDOW");
    evaluate->add_option("--bias", ev.bias, "Adaptive threshold bias for *.json predictions")
        ->envname("SEGBITE_BIAS");
    evaluate->add_flag("--invert-polarity", ev.invert, "Light ink on dark ground")
        ->envname("SEGBITE_INVERT_POLARITY");

    MergeConfig mg;
    auto* merge = app.add_subcommand(
        "merge", "Filter and group raw detections into a segmentation hypothesis");
    merge->add_option("--pred", mg.pred_path, "Prediction file, or directory of *.json")
        ->required();
    merge->add_option("--out", mg.out_path, "Output file, or directory when --pred is one")
        ->required();
    merge->add_option("--method", mg.method, "Grouping signal: chains or cosine")
        ->check(CLI::IsMember({"chains", "cosine"}));
    merge->add_option("--cosine-threshold", mg.cosine_threshold,
                      "Similarity needed to merge (cosine method)");
    merge->add_flag("--exclude-diagonal", mg.exclude_diagonal,
                    "Forbid self-votes in the score matrix (every box must pick a partner)");
    merge->add_flag("--no-containment-filter", mg.no_containment_filter,
                    "Keep boxes enclosed in larger detections");
    merge->add_option("--jobs", mg.jobs, "Worker threads")->envname("SEGBITE_JOBS");

    StatsConfig st;
    auto* stats = app.add_subcommand("stats", "Corpus census over an annotation file");
    stats->add_option("--coco", st.coco_path, "Annotation file (COCO with relations)")
        ->required();
    stats->add_option("--split-manifest", st.split_manifest,
                      "JSON object page_id -> split name for per-split counts");
    stats->add_option("--ocr-dir", st.ocr_dir, "Per-page OCR XML for textline counts");
    stats->add_option("--ocr", st.ocr_format, "OCR format")
        ->check(CLI::IsMember({"pagexml", "alto"}))
        ->envname("SEGBITE_OCR");
    stats->add_option("--json", st.json_path, "Write the machine-readable census here");

    ValidateConfig vd;
    auto* validate = app.add_subcommand("validate", "Check inputs against the data invariants");
    validate->add_option("--coco", vd.coco_path, "Annotation file to check");
    validate->add_option("--pred", vd.pred_paths,
                         "Prediction file(s) or directories to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (app.got_subcommand(build_mask)) return cmd_build_mask(bm);
        if (app.got_subcommand(evaluate)) return cmd_evaluate(ev);
        if (app.got_subcommand(merge)) return cmd_merge(mg);
        if (app.got_subcommand(stats)) return cmd_stats(st);
        if (app.got_subcommand(validate)) return cmd_validate(vd);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
