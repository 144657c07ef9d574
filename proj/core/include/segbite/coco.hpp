#pragma once

#include "segbite/geometry.hpp"
#include "segbite/region_class.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace segbite {

struct CocoImage {
    std::int64_t id = 0;
    std::string file_name;
    Size size;
};

struct CocoAnnotation {
    std::int64_t id = 0;
    std::int64_t image_id = 0;
    std::int64_t category_id = 0;
    BBox bbox;
};

struct CocoCategory {
    std::int64_t id = 0;
    std::string name;     // as written in the file
    RegionClass cls;      // normalized
};

/// Directed link between two annotations on the same image.
struct CocoRelation {
    std::int64_t source = 0;
    std::int64_t target = 0;
};

struct CocoDocument {
    std::vector<CocoImage> images;
    std::vector<CocoAnnotation> annotations;
    std::vector<CocoCategory> categories;
    std::vector<CocoRelation> relations;
};

/// Parses the extended COCO layout: the standard `images`, `annotations`
/// (bbox as [x, y, width, height]) and `categories` keys plus a top-level
/// `relations` array of {"source": id, "target": id} entries. "from"/"to"
/// is accepted as an alternative relation key pair. Unknown top-level keys
/// are ignored. Fractional coordinates are rounded half-up.
///
/// Throws ParseError on malformed JSON (message carries the byte offset),
/// ValidationError on dangling ids, cross-image relations or categories
/// outside {title, text, page-number}.
CocoDocument parse_coco(std::string_view bytes);

} // namespace segbite
