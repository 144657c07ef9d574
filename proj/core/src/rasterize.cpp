#include "segbite/rasterize.hpp"

#include "segbite/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace segbite {

BinaryMask rasterize_textlines(const std::vector<TextLine>& lines, Size size) {
    BinaryMask mask = make_mask(size);
    for (const TextLine& line : lines) {
        if (!line.polygon.valid()) {
            continue;
        }
        const BBox box = line.polygon.bounding_box();
        const int x0 = std::max(0, box.x);
        const int y0 = std::max(0, box.y);
        const int x1 = std::min(size.width - 1, box.right() - 1);
        const int y1 = std::min(size.height - 1, box.bottom() - 1);
        for (int y = y0; y <= y1; ++y) {
            std::uint8_t* row = mask.bits.data() + std::size_t(y) * size.width;
            for (int x = x0; x <= x1; ++x) {
                if (!row[x] && point_in_polygon(Point{x, y}, line.polygon)) {
                    row[x] = 1;
                }
            }
        }
    }
    return mask;
}

LabelMap build_label_map(const AnnotatedPage& page, const Segmentation& seg,
                         const std::vector<TextLine>& lines, const BinaryMask& mask) {
    if (!(mask.size == page.size)) {
        throw ArgumentError("build_label_map: mask is " + std::to_string(mask.size.width) + "x" +
                            std::to_string(mask.size.height) + " but page is " +
                            std::to_string(page.size.width) + "x" +
                            std::to_string(page.size.height));
    }
    const Size size = page.size;
    const BinaryMask line_mask = rasterize_textlines(lines, size);

    std::unordered_map<std::int64_t, const Region*> by_id;
    for (const auto& region : page.regions) {
        by_id.emplace(region.id, &region);
    }

    // Ambiguous pixels (claimed by two segments) are excluded, not
    // assigned by precedence.
    constexpr std::uint32_t kAmbiguous = 0xFFFFFFFFu;

    LabelMap map;
    map.size = size;
    map.labels.assign(std::size_t(size.area()), 0);

    for (const Segment& segment : seg.segments) {
        for (std::int64_t member : segment.members) {
            const auto it = by_id.find(member);
            if (it == by_id.end()) {
                throw ArgumentError("build_label_map: segment " + std::to_string(segment.id) +
                                    " references unknown region " + std::to_string(member));
            }
            const BBox& box = it->second->bbox;
            const int x0 = std::max(0, box.x);
            const int y0 = std::max(0, box.y);
            const int x1 = std::min(size.width, box.right());
            const int y1 = std::min(size.height, box.bottom());
            for (int y = y0; y < y1; ++y) {
                const std::size_t offset = std::size_t(y) * size.width;
                for (int x = x0; x < x1; ++x) {
                    if (!mask.bits[offset + x] || !line_mask.bits[offset + x]) {
                        continue;
                    }
                    std::uint32_t& label = map.labels[offset + x];
                    if (label == 0) {
                        label = segment.id;
                    } else if (label != segment.id) {
                        label = kAmbiguous;
                    }
                }
            }
        }
    }

    for (std::uint32_t& label : map.labels) {
        if (label == kAmbiguous) {
            label = 0;
        }
    }
    return map;
}

std::map<std::uint32_t, std::uint64_t> foreground_census(const LabelMap& map) {
    std::map<std::uint32_t, std::uint64_t> counts;
    for (std::uint32_t label : map.labels) {
        if (label != 0) {
            ++counts[label];
        }
    }
    return counts;
}

} // namespace segbite
