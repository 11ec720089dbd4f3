#pragma once

// Allocation-free primitives on raw counterclockwise vertex spans. These are
// shared by convex_core and the asymmetry optimizer, whose inner loops cannot
// afford to canonicalize intermediate polygons.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "palgeo/point.hpp"

namespace palgeo::detail {

inline double segment_distance_sq(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const Point2 ap = p - a;
    const double len_sq = dot(ab, ab);
    double t = len_sq > 0.0 ? dot(ap, ab) / len_sq : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point2 d = ap - t * ab;
    return dot(d, d);
}

// Distance from p to a convex counterclockwise polygon; zero inside. The
// nearest boundary point always lies on an edge that sees p from outside, so
// only those edges are measured.
inline double distance_to_convex(std::span<const Point2> poly, Point2 p) {
    const std::size_t n = poly.size();
    double best = std::numeric_limits<double>::infinity();
    bool outside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[i + 1 == n ? 0 : i + 1];
        if (orient(a, b, p) < 0.0) {
            outside = true;
            best = std::min(best, segment_distance_sq(p, a, b));
        }
    }
    return outside ? std::sqrt(best) : 0.0;
}

inline double directed_hausdorff(std::span<const Point2> from, std::span<const Point2> to) {
    double worst = 0.0;
    for (const Point2& p : from) worst = std::max(worst, distance_to_convex(to, p));
    return worst;
}

inline double signed_area(std::span<const Point2> poly) {
    const std::size_t n = poly.size();
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) twice += cross(poly[i], poly[i + 1 == n ? 0 : i + 1]);
    return 0.5 * twice;
}

// Sutherland-Hodgman step: keep the part of `in` on the left of the directed
// line a->b. `out` is overwritten.
inline void clip_left(std::span<const Point2> in, Point2 a, Point2 b, std::vector<Point2>& out) {
    out.clear();
    const std::size_t n = in.size();
    if (n == 0) return;
    const Point2 dir = b - a;
    Point2 prev = in[n - 1];
    double prev_side = cross(dir, prev - a);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 cur = in[i];
        const double side = cross(dir, cur - a);
        if (side >= 0.0) {
            if (prev_side < 0.0) out.push_back(prev + (prev_side / (prev_side - side)) * (cur - prev));
            out.push_back(cur);
        } else if (prev_side >= 0.0) {
            out.push_back(prev + (prev_side / (prev_side - side)) * (cur - prev));
        }
        prev = cur;
        prev_side = side;
    }
}

// Area of the intersection of two convex counterclockwise polygons. `clipper`
// edges are applied to `subject`; scratch buffers are reused across calls.
inline double convex_intersection_area(std::span<const Point2> subject, std::span<const Point2> clipper,
                                       std::vector<Point2>& buf_a, std::vector<Point2>& buf_b) {
    buf_a.assign(subject.begin(), subject.end());
    const std::size_t m = clipper.size();
    for (std::size_t i = 0; i < m && !buf_a.empty(); ++i) {
        clip_left(buf_a, clipper[i], clipper[i + 1 == m ? 0 : i + 1], buf_b);
        buf_a.swap(buf_b);
    }
    return buf_a.size() < 3 ? 0.0 : std::max(0.0, signed_area(buf_a));
}

}  // namespace palgeo::detail
