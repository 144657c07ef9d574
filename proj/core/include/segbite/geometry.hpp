#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace segbite {

struct Size {
    int width = 0;
    int height = 0;

    bool valid() const { return width > 0 && height > 0; }
    std::int64_t area() const { return std::int64_t(width) * height; }

    friend bool operator==(const Size&, const Size&) = default;
};

/// Axis-aligned box in image coordinates, origin top-left.
/// Covers the pixel range [x, x+w) x [y, y+h), so area() == w*h.
struct BBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    int right() const { return x + w; }
    int bottom() const { return y + h; }
    std::int64_t area() const { return std::int64_t(w) * h; }

    bool valid() const { return w > 0 && h > 0 && x >= 0 && y >= 0; }

    double center_x() const { return x + w / 2.0; }
    double center_y() const { return y + h / 2.0; }

    bool contains_pixel(int px, int py) const {
        return px >= x && px < right() && py >= y && py < bottom();
    }

    friend bool operator==(const BBox&, const BBox&) = default;
};

struct Point {
    int x = 0;
    int y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Closed polygon: the last vertex connects back to the first.
struct Polygon {
    std::vector<Point> points;

    bool valid() const { return points.size() >= 3; }

    BBox bounding_box() const;

    static Polygon from_bbox(const BBox& box);
};

/// True iff every point of `inner` lies within `outer`, edges inclusive.
/// A box contains itself; callers filtering detections must exclude the
/// self comparison.
bool bbox_contains(const BBox& outer, const BBox& inner);

/// Overlap rectangle, or nullopt when the boxes are disjoint.
/// Zero-area overlap counts as disjoint.
std::optional<BBox> bbox_intersection(const BBox& a, const BBox& b);

/// area(inner ∩ outer) / area(inner); 0 when disjoint or inner degenerate.
double enclosure_ratio(const BBox& outer, const BBox& inner);

/// Even-odd point-in-polygon test, boundary pixels count as inside.
/// Exact integer arithmetic throughout.
bool point_in_polygon(const Point& p, const Polygon& poly);

} // namespace segbite
