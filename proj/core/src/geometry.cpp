#include "segbite/geometry.hpp"

#include <algorithm>
#include <limits>

namespace segbite {

BBox Polygon::bounding_box() const {
    int min_x = std::numeric_limits<int>::max();
    int min_y = std::numeric_limits<int>::max();
    int max_x = std::numeric_limits<int>::min();
    int max_y = std::numeric_limits<int>::min();
    for (const Point& p : points) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    return BBox{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
}

Polygon Polygon::from_bbox(const BBox& box) {
    // Vertices on the last covered pixel row/column so that the polygon's
    // inclusive interior equals the box's half-open pixel set.
    return Polygon{{{box.x, box.y},
                    {box.right() - 1, box.y},
                    {box.right() - 1, box.bottom() - 1},
                    {box.x, box.bottom() - 1}}};
}

bool bbox_contains(const BBox& outer, const BBox& inner) {
    return inner.x >= outer.x && inner.y >= outer.y &&
           inner.right() <= outer.right() && inner.bottom() <= outer.bottom();
}

std::optional<BBox> bbox_intersection(const BBox& a, const BBox& b) {
    const int x0 = std::max(a.x, b.x);
    const int y0 = std::max(a.y, b.y);
    const int x1 = std::min(a.right(), b.right());
    const int y1 = std::min(a.bottom(), b.bottom());
    if (x1 <= x0 || y1 <= y0) {
        return std::nullopt;
    }
    return BBox{x0, y0, x1 - x0, y1 - y0};
}

double enclosure_ratio(const BBox& outer, const BBox& inner) {
    if (inner.area() <= 0) {
        return 0.0;
    }
    const auto overlap = bbox_intersection(outer, inner);
    if (!overlap) {
        return 0.0;
    }
    return double(overlap->area()) / double(inner.area());
}

namespace {

bool on_segment(const Point& p, const Point& a, const Point& b) {
    const std::int64_t cross = std::int64_t(b.x - a.x) * (p.y - a.y) -
                               std::int64_t(b.y - a.y) * (p.x - a.x);
    if (cross != 0) {
        return false;
    }
    return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
           p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

} // namespace

bool point_in_polygon(const Point& p, const Polygon& poly) {
    const auto& pts = poly.points;
    const std::size_t n = pts.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = pts[j];
        const Point& b = pts[i];
        if (on_segment(p, a, b)) {
            return true;
        }
        if ((a.y > p.y) != (b.y > p.y)) {
            // Ray to +x crosses edge (a,b); compare p.x against the exact
            // intersection without division: sign-adjust by dy.
            const std::int64_t dy = b.y - a.y;
            const std::int64_t lhs = std::int64_t(p.x - a.x) * dy;
            const std::int64_t rhs = std::int64_t(p.y - a.y) * (b.x - a.x);
            if (dy > 0 ? lhs < rhs : lhs > rhs) {
                inside = !inside;
            }
        }
    }
    return inside;
}

} // namespace segbite
