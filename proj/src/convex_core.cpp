#include "palgeo/convex_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "kernels.hpp"
#include "palgeo/errors.hpp"

namespace palgeo {

double area(const ConvexPolygon& k) { return detail::signed_area(k.points()); }

double perimeter(const ConvexPolygon& k) {
    double total = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) total += distance(k.vertex(i), k.vertex(i + 1));
    return total;
}

double diameter(const ConvexPolygon& k) {
    double best = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t j = i + 1; j < k.size(); ++j) {
            const Point2 d = k[i] - k[j];
            best = std::max(best, dot(d, d));
        }
    }
    return std::sqrt(best);
}

Point2 centroid(const ConvexPolygon& k) {
    // Shift to the first vertex so the accumulation is translation-stable.
    const Point2 o = k[0];
    double twice_area = 0.0;
    Point2 acc;
    for (std::size_t i = 0; i < k.size(); ++i) {
        const Point2 a = k.vertex(i) - o;
        const Point2 b = k.vertex(i + 1) - o;
        const double c = cross(a, b);
        twice_area += c;
        acc = acc + c * (a + b);
    }
    return o + acc / (3.0 * twice_area);
}

double directional_width(const ConvexPolygon& k, double theta) {
    const Point2 u{std::cos(theta), std::sin(theta)};
    double lo = dot(u, k[0]);
    double hi = lo;
    for (const Point2& p : k) {
        const double t = dot(u, p);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    return hi - lo;
}

Width minimal_width(const ConvexPolygon& k) {
    const std::size_t n = k.size();
    auto height = [&](std::size_t edge, std::size_t v) {
        const Point2 a = k.vertex(edge);
        const Point2 b = k.vertex(edge + 1);
        return orient(a, b, k.vertex(v)) / distance(a, b);
    };

    std::vector<Width> candidates(n);
    std::size_t far = 1;
    for (std::size_t i = 0; i < n; ++i) {
        // The antipodal vertex only ever advances as the edge rotates.
        for (std::size_t steps = 0; steps < n && height(i, far + 1) > height(i, far); ++steps) far = (far + 1) % n;
        const Point2 e = k.vertex(i + 1) - k.vertex(i);
        double angle = std::atan2(-e.x, e.y);  // outward normal (e.y, -e.x)
        if (angle < 0.0) angle += std::numbers::pi;
        if (angle >= std::numbers::pi) angle -= std::numbers::pi;
        candidates[i] = {height(i, far), angle};
    }

    const double tie_tol = kDefaultTolerances.geom * diameter(k);
    Width best = *std::min_element(candidates.begin(), candidates.end(),
                                   [](const Width& a, const Width& b) { return a.value < b.value; });
    for (const Width& c : candidates) {
        if (c.value <= best.value + tie_tol && c.direction < best.direction) best.direction = c.direction;
    }
    return best;
}

double point_to_body_distance(Point2 p, const ConvexPolygon& k) { return detail::distance_to_convex(k.points(), p); }

double directed_hausdorff(const ConvexPolygon& from, const ConvexPolygon& to) {
    return detail::directed_hausdorff(from.points(), to.points());
}

double hausdorff(const ConvexPolygon& k, const ConvexPolygon& j) {
    return std::max(directed_hausdorff(k, j), directed_hausdorff(j, k));
}

bool neighborhood_contains(const ConvexPolygon& k, const ConvexPolygon& j, double eps) {
    return std::all_of(k.begin(), k.end(), [&](Point2 p) { return point_to_body_distance(p, j) <= eps; });
}

ConvexPolygon erode(const ConvexPolygon& k, double eps) {
    if (eps < 0.0 || !std::isfinite(eps)) throw DomainError("erosion distance must be non-negative");
    if (eps == 0.0) return k;
    if (eps >= chebyshev_indisk(k).radius) throw EmptyErosion("erosion distance reaches the inradius");

    std::vector<Point2> current(k.begin(), k.end());
    std::vector<Point2> next;
    for (std::size_t i = 0; i < k.size() && !current.empty(); ++i) {
        const Point2 a = k.vertex(i);
        const Point2 b = k.vertex(i + 1);
        const Point2 e = b - a;
        const Point2 inward = Point2{-e.y, e.x} / norm(e);
        detail::clip_left(current, a + eps * inward, b + eps * inward, next);
        current.swap(next);
    }
    try {
        return make_polygon(current);
    } catch (const DegenerateInput&) {
        throw EmptyErosion("erosion collapses to a set without interior");
    }
}

std::optional<ConvexPolygon> intersection(const ConvexPolygon& k, const ConvexPolygon& j) {
    std::vector<Point2> a;
    std::vector<Point2> b;
    if (detail::convex_intersection_area(k.points(), j.points(), a, b) <= 0.0) return std::nullopt;
    try {
        return make_polygon(a);
    } catch (const DegenerateInput&) {
        return std::nullopt;
    }
}

double intersection_area(const ConvexPolygon& k, const ConvexPolygon& j) {
    std::vector<Point2> a;
    std::vector<Point2> b;
    return detail::convex_intersection_area(k.points(), j.points(), a, b);
}

double symmetric_difference_area(const ConvexPolygon& k, const ConvexPolygon& j) {
    return std::max(0.0, area(k) + area(j) - 2.0 * intersection_area(k, j));
}

namespace {

template <class F>
ConvexPolygon transform(const ConvexPolygon& k, F f) {
    std::vector<Point2> pts;
    pts.reserve(k.size());
    for (const Point2& p : k) pts.push_back(f(p));
    return make_polygon(pts);
}

}  // namespace

ConvexPolygon scaled(const ConvexPolygon& k, double factor) {
    if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
    return transform(k, [&](Point2 p) { return factor * p; });
}

ConvexPolygon translated(const ConvexPolygon& k, Point2 offset) {
    return transform(k, [&](Point2 p) { return p + offset; });
}

ConvexPolygon rotated(const ConvexPolygon& k, double angle) {
    return transform(k, [&](Point2 p) { return rotate(p, angle); });
}

}  // namespace palgeo
