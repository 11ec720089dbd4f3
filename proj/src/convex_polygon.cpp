#include "palgeo/convex_polygon.hpp"

#include <algorithm>
#include <cmath>

#include "palgeo/errors.hpp"

namespace palgeo {

namespace {

bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Drops vertices whose turn is not strictly left, cyclically, until stable.
void remove_flat_vertices(std::vector<Point2>& hull, double cross_tol) {
    bool changed = true;
    while (changed && hull.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < hull.size() && hull.size() >= 3; ++i) {
            const std::size_t n = hull.size();
            const Point2 prev = hull[(i + n - 1) % n];
            const Point2 next = hull[(i + 1) % n];
            if (orient(prev, hull[i], next) <= cross_tol) {
                hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

ConvexPolygon make_polygon(std::span<const Point2> points, const Tolerances& tol) {
    std::vector<Point2> pts(points.begin(), points.end());
    for (const Point2& p : pts) {
        if (!is_finite(p)) throw DegenerateInput("polygon has a non-finite coordinate");
    }
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw DegenerateInput("polygon needs at least three distinct points");

    double min_y = pts.front().y;
    double max_y = min_y;
    for (const Point2& p : pts) {
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double scale = std::hypot(pts.back().x - pts.front().x, max_y - min_y);
    const double cross_tol = tol.geom * scale * scale;

    // Andrew's monotone chain; non-left turns are popped.
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point2& p : pts) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= cross_tol) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const Point2 p = pts[i];
        while (k >= lower && orient(hull[k - 2], hull[k - 1], p) <= cross_tol) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    remove_flat_vertices(hull, cross_tol);

    if (hull.size() < 3) throw DegenerateInput("convex hull is degenerate (collinear points)");
    double twice_area = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) twice_area += cross(hull[i], hull[(i + 1) % hull.size()]);
    if (0.5 * twice_area <= tol.geom * scale * scale) throw DegenerateInput("convex hull has zero area");

    const auto start = std::min_element(hull.begin(), hull.end(), [](Point2 a, Point2 b) {
        return a.y < b.y || (a.y == b.y && a.x < b.x);
    });
    std::rotate(hull.begin(), start, hull.end());
    return ConvexPolygon(std::move(hull));
}

}  // namespace palgeo
