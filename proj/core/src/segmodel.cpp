#include "segbite/segmodel.hpp"

#include "segbite/errors.hpp"
#include "segbite/union_find.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace segbite {

std::string page_id_from_file_name(const std::string& file_name) {
    const auto slash = file_name.find_last_of("/\\");
    std::string stem = slash == std::string::npos ? file_name : file_name.substr(slash + 1);
    const auto dot = stem.find_last_of('.');
    if (dot != std::string::npos && dot > 0) {
        stem.resize(dot);
    }
    return stem;
}

std::vector<AnnotatedPage> pages_from_coco(const CocoDocument& doc) {
    std::unordered_map<std::int64_t, RegionClass> category_class;
    for (const auto& cat : doc.categories) {
        category_class.emplace(cat.id, cat.cls);
    }

    std::map<std::int64_t, AnnotatedPage> by_image;
    for (const auto& img : doc.images) {
        AnnotatedPage page;
        page.page_id = page_id_from_file_name(img.file_name);
        page.size = img.size;
        by_image.emplace(img.id, std::move(page));
    }

    std::unordered_map<std::int64_t, std::int64_t> annotation_image;
    for (const auto& ann : doc.annotations) {
        annotation_image.emplace(ann.id, ann.image_id);
        auto& page = by_image.at(ann.image_id);
        page.regions.push_back(Region{ann.id, ann.bbox, category_class.at(ann.category_id)});
    }
    for (const auto& rel : doc.relations) {
        auto& page = by_image.at(annotation_image.at(rel.source));
        page.relations.push_back(Relation{rel.source, rel.target});
    }

    std::vector<AnnotatedPage> pages;
    pages.reserve(by_image.size());
    for (auto& [id, page] : by_image) {
        pages.push_back(std::move(page));
    }
    std::sort(pages.begin(), pages.end(),
              [](const AnnotatedPage& a, const AnnotatedPage& b) { return a.page_id < b.page_id; });
    return pages;
}

AnnotatedPage drop_enclosed_titles(const AnnotatedPage& page) {
    AnnotatedPage out;
    out.page_id = page.page_id;
    out.size = page.size;
    out.relations = page.relations;

    std::unordered_map<std::int64_t, bool> has_relation;
    for (const auto& rel : page.relations) {
        has_relation[rel.source] = true;
        has_relation[rel.target] = true;
    }

    out.regions.reserve(page.regions.size());
    for (const auto& region : page.regions) {
        if (region.cls == RegionClass::Title && !has_relation.count(region.id)) {
            const bool enclosed = std::any_of(
                page.regions.begin(), page.regions.end(), [&](const Region& other) {
                    return other.cls == RegionClass::Text &&
                           enclosure_ratio(other.bbox, region.bbox) >= kEnclosureThreshold;
                });
            if (enclosed) {
                continue;
            }
        }
        out.regions.push_back(region);
    }
    return out;
}

namespace {

/// Orders a component's members along its directed relations when they
/// form a simple path over all members; otherwise geometric order.
std::vector<std::int64_t> order_members(const std::vector<std::int64_t>& members,
                                        const std::vector<Relation>& relations,
                                        const std::unordered_map<std::int64_t, const Region*>& by_id) {
    std::unordered_map<std::int64_t, std::int64_t> next;
    std::unordered_map<std::int64_t, int> in_degree, out_degree;
    bool simple = true;
    for (const auto& rel : relations) {
        if (++out_degree[rel.source] > 1 || ++in_degree[rel.target] > 1) {
            simple = false;
        }
        next[rel.source] = rel.target;
    }

    if (simple && !relations.empty()) {
        std::int64_t head = -1;
        for (std::int64_t id : members) {
            if (!in_degree.count(id)) {
                if (head != -1) {
                    simple = false; // two heads: forest, not a path
                    break;
                }
                head = id;
            }
        }
        if (simple && head != -1) {
            std::vector<std::int64_t> ordered;
            ordered.reserve(members.size());
            std::int64_t cur = head;
            while (ordered.size() < members.size()) {
                ordered.push_back(cur);
                const auto it = next.find(cur);
                if (it == next.end()) {
                    break;
                }
                cur = it->second;
            }
            if (ordered.size() == members.size()) {
                return ordered;
            }
        }
    }

    std::vector<std::int64_t> ordered = members;
    std::sort(ordered.begin(), ordered.end(), [&](std::int64_t a, std::int64_t b) {
        const BBox& ba = by_id.at(a)->bbox;
        const BBox& bb = by_id.at(b)->bbox;
        if (ba.y != bb.y) {
            return ba.y < bb.y;
        }
        if (ba.x != bb.x) {
            return ba.x < bb.x;
        }
        return a < b;
    });
    return ordered;
}

} // namespace

Segmentation segments_from_relations(const AnnotatedPage& page) {
    std::unordered_map<std::int64_t, std::size_t> index_of;
    std::unordered_map<std::int64_t, const Region*> by_id;
    std::vector<const Region*> participating;
    for (const auto& region : page.regions) {
        by_id.emplace(region.id, &region);
        if (region.cls == RegionClass::PageNumber) {
            continue;
        }
        index_of.emplace(region.id, participating.size());
        participating.push_back(&region);
    }

    UnionFind uf(participating.size());
    for (const auto& rel : page.relations) {
        for (std::int64_t endpoint : {rel.source, rel.target}) {
            const auto it = by_id.find(endpoint);
            if (it == by_id.end()) {
                throw ValidationError("page " + page.page_id + ": relation endpoint " +
                                      std::to_string(endpoint) + " is not a region");
            }
            if (it->second->cls == RegionClass::PageNumber) {
                throw ValidationError("page " + page.page_id + ": relation touches page-number region " +
                                      std::to_string(endpoint));
            }
        }
        uf.merge(index_of.at(rel.source), index_of.at(rel.target));
    }

    // Components keyed by root; component order = first appearance in the
    // region list, which makes segment numbering reproducible.
    std::unordered_map<std::size_t, std::size_t> component_of_root;
    std::vector<std::vector<std::int64_t>> members;
    for (std::size_t i = 0; i < participating.size(); ++i) {
        const std::size_t root = uf.find(i);
        const auto [it, inserted] = component_of_root.emplace(root, members.size());
        if (inserted) {
            members.emplace_back();
        }
        members[it->second].push_back(participating[i]->id);
    }

    // Relations grouped per component for the ordering pass.
    std::vector<std::vector<Relation>> component_relations(members.size());
    for (const auto& rel : page.relations) {
        const std::size_t root = uf.find(index_of.at(rel.source));
        component_relations[component_of_root.at(root)].push_back(rel);
    }

    Segmentation seg;
    seg.segments.reserve(members.size());
    for (std::size_t c = 0; c < members.size(); ++c) {
        Segment segment;
        segment.id = std::uint32_t(c + 1);
        segment.members = order_members(members[c], component_relations[c], by_id);
        seg.segments.push_back(std::move(segment));
    }
    return seg;
}

std::vector<Diagnostic> validate_page(const AnnotatedPage& page) {
    std::vector<Diagnostic> out;
    auto report = [&](std::string msg) {
        out.push_back(Diagnostic{page.page_id, std::move(msg)});
    };

    std::unordered_map<std::int64_t, const Region*> by_id;
    for (const auto& region : page.regions) {
        by_id.emplace(region.id, &region);
        const std::string tag = "region " + std::to_string(region.id);
        if (region.bbox.w <= 0 || region.bbox.h <= 0) {
            report(tag + ": degenerate box (" + std::to_string(region.bbox.w) + "x" +
                   std::to_string(region.bbox.h) + ")");
        }
        if (region.bbox.x < 0 || region.bbox.y < 0) {
            report(tag + ": negative origin");
        }
        if (page.size.valid() &&
            (region.bbox.right() > page.size.width || region.bbox.bottom() > page.size.height)) {
            report(tag + ": box extends past the image (" + std::to_string(region.bbox.right()) +
                   "," + std::to_string(region.bbox.bottom()) + " vs " +
                   std::to_string(page.size.width) + "x" + std::to_string(page.size.height) + ")");
        }
    }

    for (const auto& rel : page.relations) {
        for (std::int64_t endpoint : {rel.source, rel.target}) {
            const auto it = by_id.find(endpoint);
            if (it == by_id.end()) {
                report("relation endpoint " + std::to_string(endpoint) + " is not a region on this page");
            } else if (it->second->cls == RegionClass::PageNumber) {
                report("relation touches page-number region " + std::to_string(endpoint) +
                       "; page numbers carry no relations");
            }
        }
    }
    return out;
}

} // namespace segbite
