#include <doctest.h>

#include "segbite/geometry.hpp"
#include "segbite/rng.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace segbite;

namespace {

// Monotone-chain convex hull over integer points; strictly convex output
// (collinear points dropped). Independent of the library under test.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return std::int64_t(a.x - o.x) * (b.y - o.y) - std::int64_t(a.y - o.y) * (b.x - o.x);
    };
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// For a convex polygon, inside-or-on-boundary == on the inner side of
// every edge. This is the half-plane oracle point_in_polygon is checked
// against.
bool convex_contains(const std::vector<Point>& hull, const Point& p) {
    const std::size_t n = hull.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % n];
        const std::int64_t cross =
            std::int64_t(b.x - a.x) * (p.y - a.y) - std::int64_t(b.y - a.y) * (p.x - a.x);
        if (cross < 0) return false; // hull above is counter-clockwise
    }
    return true;
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("bbox covers a half-open pixel range") {
    const BBox box{2, 3, 4, 5};
    CHECK(box.right() == 6);
    CHECK(box.bottom() == 8);
    CHECK(box.area() == 20);
    CHECK(box.contains_pixel(2, 3));
    CHECK(box.contains_pixel(5, 7));
    CHECK_FALSE(box.contains_pixel(6, 7));
    CHECK_FALSE(box.contains_pixel(5, 8));
    CHECK_FALSE(box.contains_pixel(1, 3));
}

TEST_CASE("bbox_contains includes shared edges and itself") {
    const BBox outer{0, 0, 10, 10};
    CHECK(bbox_contains(outer, BBox{0, 0, 10, 10}));
    CHECK(bbox_contains(outer, BBox{0, 0, 5, 5}));
    CHECK(bbox_contains(outer, BBox{5, 5, 5, 5}));
    CHECK_FALSE(bbox_contains(outer, BBox{5, 5, 6, 5}));
    CHECK_FALSE(bbox_contains(outer, BBox{-1, 0, 5, 5}));
}

TEST_CASE("bbox_intersection on overlap, touch and disjoint") {
    const BBox a{0, 0, 10, 10};
    const auto inter = bbox_intersection(a, BBox{5, 5, 10, 10});
    REQUIRE(inter.has_value());
    CHECK(*inter == BBox{5, 5, 5, 5});
    // Edge touch has zero area: counts as disjoint.
    CHECK_FALSE(bbox_intersection(a, BBox{10, 0, 5, 10}).has_value());
    CHECK_FALSE(bbox_intersection(a, BBox{20, 20, 5, 5}).has_value());
}

TEST_CASE("enclosure_ratio is intersection over inner area") {
    const BBox outer{0, 0, 10, 10};
    CHECK(enclosure_ratio(outer, BBox{2, 2, 4, 4}) == doctest::Approx(1.0));
    CHECK(enclosure_ratio(outer, BBox{8, 0, 4, 10}) == doctest::Approx(0.5));
    CHECK(enclosure_ratio(outer, BBox{20, 20, 4, 4}) == doctest::Approx(0.0));
    CHECK(enclosure_ratio(outer, BBox{5, 5, 0, 0}) == doctest::Approx(0.0));
}

TEST_CASE("rectangle polygon matches the box pixel set exactly") {
    const BBox box{3, 2, 5, 4};
    const Polygon poly = Polygon::from_bbox(box);
    for (int y = 0; y < 10; ++y) {
        for (int x = 0; x < 12; ++x) {
            CHECK(point_in_polygon(Point{x, y}, poly) == box.contains_pixel(x, y));
        }
    }
}

TEST_CASE("point_in_polygon includes boundary pixels") {
    // Triangle with a diagonal edge.
    Polygon tri;
    tri.points = {{0, 0}, {8, 0}, {0, 8}};
    CHECK(point_in_polygon(Point{0, 0}, tri));
    CHECK(point_in_polygon(Point{4, 0}, tri));   // horizontal edge
    CHECK(point_in_polygon(Point{0, 5}, tri));   // vertical edge
    CHECK(point_in_polygon(Point{4, 4}, tri));   // on the diagonal
    CHECK(point_in_polygon(Point{2, 3}, tri));   // interior
    CHECK_FALSE(point_in_polygon(Point{5, 4}, tri));
    CHECK_FALSE(point_in_polygon(Point{9, 0}, tri));
}

TEST_CASE("point_in_polygon on a concave outline") {
    // U shape: the notch at the top middle is outside.
    Polygon u;
    u.points = {{0, 0}, {2, 0}, {2, 4}, {4, 4}, {4, 0}, {6, 0}, {6, 6}, {0, 6}};
    CHECK(point_in_polygon(Point{1, 1}, u));
    CHECK(point_in_polygon(Point{5, 1}, u));
    CHECK(point_in_polygon(Point{3, 5}, u));
    CHECK_FALSE(point_in_polygon(Point{3, 1}, u)); // inside the notch
    CHECK(point_in_polygon(Point{3, 4}, u));       // notch floor is boundary
}

TEST_CASE("point_in_polygon equals the half-plane oracle on random convex polygons") {
    std::mt19937_64 rng(20240817);
    int tested = 0;
    while (tested < 200) {
        std::vector<Point> pts;
        const int n = 4 + int(bounded_rand(rng, 9));
        for (int i = 0; i < n; ++i) {
            pts.push_back(Point{int(bounded_rand(rng, 40)), int(bounded_rand(rng, 40))});
        }
        const std::vector<Point> hull = convex_hull(pts);
        if (hull.size() < 3) continue;
        ++tested;
        Polygon poly;
        poly.points = hull;
        for (int i = 0; i < 60; ++i) {
            const Point p{int(bounded_rand(rng, 44)) - 2, int(bounded_rand(rng, 44)) - 2};
            CAPTURE(p.x);
            CAPTURE(p.y);
            REQUIRE(point_in_polygon(p, poly) == convex_contains(hull, p));
        }
    }
}

TEST_CASE("polygon bounding_box is tight") {
    Polygon poly;
    poly.points = {{5, 1}, {9, 4}, {2, 7}};
    const BBox box = poly.bounding_box();
    CHECK(box == BBox{2, 1, 8, 7}); // covers x 2..9, y 1..7 inclusive
}

} // TEST_SUITE
