#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "palgeo/point.hpp"
#include "palgeo/tolerances.hpp"

namespace palgeo {

/// A convex body represented by its vertices.
///
/// Vertices are strictly counterclockwise, strictly convex (no three
/// consecutive vertices collinear within the geometric tolerance), and start
/// at the vertex with the lowest y (then lowest x). The only way to obtain
/// one is make_polygon(), so every instance satisfies these invariants and
/// two polygons compare equal exactly when their canonical vertex lists do.
class ConvexPolygon {
public:
    const std::vector<Point2>& vertices() const { return vertices_; }
    std::span<const Point2> points() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point2& operator[](std::size_t i) const { return vertices_[i]; }
    const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

private:
    explicit ConvexPolygon(std::vector<Point2> canonical) : vertices_(std::move(canonical)) {}
    friend ConvexPolygon make_polygon(std::span<const Point2>, const Tolerances&);

    std::vector<Point2> vertices_;
};

/// Convex hull of `points` in canonical form; collinear and duplicate points
/// are dropped. Throws DegenerateInput for fewer than three distinct points,
/// non-finite coordinates, or a hull with zero area.
ConvexPolygon make_polygon(std::span<const Point2> points, const Tolerances& tol = kDefaultTolerances);

inline ConvexPolygon make_polygon(std::initializer_list<Point2> points) {
    return make_polygon(std::span<const Point2>(points.begin(), points.size()));
}

}  // namespace palgeo
