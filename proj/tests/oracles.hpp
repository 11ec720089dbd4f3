#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's algorithms beyond constructing polygons.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "palgeo/convex_polygon.hpp"

namespace oracle {

// Convex polygon with n vertices on the unit circle at random angles; all of
// them survive the hull.
inline palgeo::ConvexPolygon random_ngon_on_circle(std::size_t n, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    std::vector<palgeo::Point2> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = u(gen);
        pts.push_back({std::cos(a), std::sin(a)});
    }
    return palgeo::make_polygon(pts);
}

inline double projection_width(const palgeo::ConvexPolygon& k, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    double lo = 1e300, hi = -1e300;
    for (const auto& v : k) {
        const double p = c * v.x + s * v.y;
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return hi - lo;
}

inline double grid_min_width(const palgeo::ConvexPolygon& k, std::size_t samples) {
    double best = 1e300;
    for (std::size_t i = 0; i < samples; ++i) {
        best = std::min(best, projection_width(k, std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples)));
    }
    return best;
}

// Point-in-convex-polygon by half-plane tests.
inline bool contains(const palgeo::ConvexPolygon& k, palgeo::Point2 p, double slack = 0.0) {
    const std::size_t n = k.size();
    for (std::size_t i = 0; i < n; ++i) {
        const palgeo::Point2 a = k[i], b = k.vertex(i + 1);
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        if ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) < -slack * len) return false;
    }
    return true;
}

inline double shoelace(const std::vector<palgeo::Point2>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return 0.5 * s;
}

}  // namespace oracle
