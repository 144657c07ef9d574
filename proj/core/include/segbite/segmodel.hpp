#pragma once

#include "segbite/coco.hpp"
#include "segbite/geometry.hpp"
#include "segbite/region_class.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace segbite {

struct Region {
    std::int64_t id = 0;
    BBox bbox;
    RegionClass cls = RegionClass::Text;
};

struct Relation {
    std::int64_t source = 0;
    std::int64_t target = 0;
};

/// Everything annotated on one page: classified boxes plus the directed
/// links that tie boxes into logical segments.
struct AnnotatedPage {
    std::string page_id;
    Size size;
    std::vector<Region> regions;
    std::vector<Relation> relations;
};

struct Segment {
    std::uint32_t id = 0;                 // 1..K, also the label-map value
    std::vector<std::int64_t> members;    // region ids in reading order
};

/// Partition of the participating region ids. Page-number regions never
/// appear; every other region lands in exactly one segment.
struct Segmentation {
    std::vector<Segment> segments;
};

struct Diagnostic {
    std::string page_id;
    std::string message;
};

/// Containment is judged by intersection-over-area so hand-drawn boxes
/// that almost nest still count; 0.95 is shared with the detection
/// containment filter.
constexpr double kEnclosureThreshold = 0.95;

/// Splits a parsed COCO document into per-page annotation sets. Page id is
/// the image file name without directory and extension. Pages are returned
/// sorted by page id.
std::vector<AnnotatedPage> pages_from_coco(const CocoDocument& doc);

/// Removes every relation-less Title region whose box is enclosed
/// (>= kEnclosureThreshold of its area) in some Text region's box; such
/// titles restate the opening of the text they sit in and carry no
/// segment of their own.
AnnotatedPage drop_enclosed_titles(const AnnotatedPage& page);

/// Connected components of the undirected relation graph over
/// non-page-number regions; isolated regions become singleton segments.
/// Member order follows the directed relation chain when the component is
/// a simple path, otherwise top-to-bottom, left-to-right box order.
/// Segments are numbered 1..K by first appearance in the region list.
/// Throws ValidationError when a relation touches a page-number region or
/// a missing region id.
Segmentation segments_from_relations(const AnnotatedPage& page);

/// All invariant violations on the page: dangling relation endpoints,
/// relations touching page numbers, degenerate boxes, boxes leaving the
/// image. Never throws; an empty result means a clean page.
std::vector<Diagnostic> validate_page(const AnnotatedPage& page);

/// File stem: "a/b/page_007.jpg" -> "page_007".
std::string page_id_from_file_name(const std::string& file_name);

} // namespace segbite
