#include "segbite/coco.hpp"

#include "input_guards.hpp"
#include "segbite/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace segbite {

namespace {

using nlohmann::json;

int round_half_up(double v) {
    return int(std::floor(v + 0.5));
}

double number_at(const json& obj, const char* key, const char* where) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number()) {
        throw ParseError(std::string("coco: missing or non-numeric '") + key + "' in " + where);
    }
    return it->get<double>();
}

std::int64_t id_at(const json& obj, const char* key, const char* where) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_integer()) {
        throw ParseError(std::string("coco: missing or non-integer '") + key + "' in " + where);
    }
    return it->get<std::int64_t>();
}

BBox parse_bbox(const json& arr) {
    if (!arr.is_array() || arr.size() != 4) {
        throw ParseError("coco: annotation 'bbox' must be an array [x, y, width, height]");
    }
    for (const auto& v : arr) {
        if (!v.is_number()) {
            throw ParseError("coco: non-numeric bbox entry");
        }
    }
    BBox box;
    box.x = round_half_up(arr[0].get<double>());
    box.y = round_half_up(arr[1].get<double>());
    box.w = round_half_up(arr[2].get<double>());
    box.h = round_half_up(arr[3].get<double>());
    // Boxes poking out past the origin keep their in-image extent.
    if (box.x < 0) {
        box.w += box.x;
        box.x = 0;
    }
    if (box.y < 0) {
        box.h += box.y;
        box.y = 0;
    }
    return box;
}

} // namespace

CocoDocument parse_coco(std::string_view bytes) {
    detail::guard_json_depth(bytes);
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("coco: ") + e.what() + " (byte " + std::to_string(e.byte) + ")");
    }
    if (!doc.is_object()) {
        throw ParseError("coco: top level must be an object");
    }

    CocoDocument out;

    if (const auto it = doc.find("images"); it != doc.end() && it->is_array()) {
        out.images.reserve(it->size());
        for (const auto& img : *it) {
            CocoImage ci;
            ci.id = id_at(img, "id", "images");
            const auto fn = img.find("file_name");
            if (fn == img.end() || !fn->is_string()) {
                throw ParseError("coco: image entry missing 'file_name'");
            }
            ci.file_name = fn->get<std::string>();
            ci.size.width = round_half_up(number_at(img, "width", "images"));
            ci.size.height = round_half_up(number_at(img, "height", "images"));
            out.images.push_back(std::move(ci));
        }
    }

    std::unordered_map<std::int64_t, RegionClass> category_class;
    if (const auto it = doc.find("categories"); it != doc.end() && it->is_array()) {
        out.categories.reserve(it->size());
        for (const auto& cat : *it) {
            CocoCategory cc;
            cc.id = id_at(cat, "id", "categories");
            const auto name = cat.find("name");
            if (name == cat.end() || !name->is_string()) {
                throw ParseError("coco: category entry missing 'name'");
            }
            cc.name = name->get<std::string>();
            const auto cls = region_class_from_name(cc.name);
            if (!cls) {
                throw ValidationError("coco: unknown category '" + cc.name +
                                      "' (expected title, text or page-number)");
            }
            cc.cls = *cls;
            category_class.emplace(cc.id, cc.cls);
            out.categories.push_back(std::move(cc));
        }
    }

    std::unordered_set<std::int64_t> image_ids;
    for (const auto& img : out.images) {
        image_ids.insert(img.id);
    }

    std::unordered_map<std::int64_t, std::int64_t> annotation_image;
    if (const auto it = doc.find("annotations"); it != doc.end() && it->is_array()) {
        out.annotations.reserve(it->size());
        for (const auto& ann : *it) {
            CocoAnnotation ca;
            ca.id = id_at(ann, "id", "annotations");
            ca.image_id = id_at(ann, "image_id", "annotations");
            ca.category_id = id_at(ann, "category_id", "annotations");
            const auto bbox = ann.find("bbox");
            if (bbox == ann.end()) {
                throw ParseError("coco: annotation " + std::to_string(ca.id) + " missing 'bbox'");
            }
            ca.bbox = parse_bbox(*bbox);
            if (!image_ids.count(ca.image_id)) {
                throw ValidationError("coco: annotation " + std::to_string(ca.id) +
                                      " references unknown image " + std::to_string(ca.image_id));
            }
            if (!category_class.count(ca.category_id)) {
                throw ValidationError("coco: annotation " + std::to_string(ca.id) +
                                      " references unknown category " + std::to_string(ca.category_id));
            }
            annotation_image.emplace(ca.id, ca.image_id);
            out.annotations.push_back(ca);
        }
    }

    if (const auto it = doc.find("relations"); it != doc.end() && it->is_array()) {
        out.relations.reserve(it->size());
        for (const auto& rel : *it) {
            CocoRelation cr;
            // Compatibility shim: upstream exports may name the endpoints
            // "from"/"to" instead of "source"/"target".
            if (rel.contains("source") && rel.contains("target")) {
                cr.source = id_at(rel, "source", "relations");
                cr.target = id_at(rel, "target", "relations");
            } else if (rel.contains("from") && rel.contains("to")) {
                cr.source = id_at(rel, "from", "relations");
                cr.target = id_at(rel, "to", "relations");
            } else {
                throw ParseError("coco: relation entry needs source/target (or from/to) keys");
            }
            const auto src = annotation_image.find(cr.source);
            if (src == annotation_image.end()) {
                throw ValidationError("coco: relation source " + std::to_string(cr.source) +
                                      " is not an annotation id");
            }
            const auto tgt = annotation_image.find(cr.target);
            if (tgt == annotation_image.end()) {
                throw ValidationError("coco: relation target " + std::to_string(cr.target) +
                                      " is not an annotation id");
            }
            if (src->second != tgt->second) {
                throw ValidationError("coco: relation " + std::to_string(cr.source) + " -> " +
                                      std::to_string(cr.target) + " crosses images");
            }
            out.relations.push_back(cr);
        }
    }

    return out;
}

} // namespace segbite
