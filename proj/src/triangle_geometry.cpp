#include "palgeo/triangle_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "palgeo/errors.hpp"

namespace palgeo {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

Point2 line_intersection(Point2 n1, double c1, Point2 n2, double c2) {
    const double det = cross(n1, n2);
    return {(c1 * n2.y - c2 * n1.y) / det, (n1.x * c2 - n2.x * c1) / det};
}

}  // namespace

TriangleMetrics triangle_metrics(const ConvexPolygon& t) {
    if (t.size() != 3) throw NotATriangle("expected a polygon with 3 vertices, got " + std::to_string(t.size()));

    std::array<double, 3> side{};
    std::array<double, 3> angle{};
    for (std::size_t j = 0; j < 3; ++j) {
        const Point2 v = t.vertex(j);
        const Point2 a = t.vertex(j + 1) - v;
        const Point2 b = t.vertex(j + 2) - v;
        side[j] = norm(a - b);
        angle[j] = std::atan2(std::abs(cross(a, b)), dot(a, b));
    }
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return side[a] > side[b]; });

    TriangleMetrics m;
    m.area = area(t);
    for (std::size_t j = 0; j < 3; ++j) {
        m.sides[j] = side[order[j]];
        m.angles[j] = angle[order[j]];
        m.vertices[j] = t.vertex(order[j]);
        m.heights[j] = 2.0 * m.area / m.sides[j];
    }
    m.width = m.heights[0];
    m.inradius = 2.0 * m.area / (m.sides[0] + m.sides[1] + m.sides[2]);
    return m;
}

std::array<Point2, 3> equilateral_vertices(const EquilateralPlacement& p) {
    const double circumradius = 2.0 * p.width / 3.0;
    std::array<Point2, 3> v;
    for (int i = 0; i < 3; ++i) {
        const double phi = p.rotation + std::numbers::pi / 2.0 + i * 2.0 * std::numbers::pi / 3.0;
        v[i] = p.center + circumradius * Point2{std::cos(phi), std::sin(phi)};
    }
    return v;
}

ConvexPolygon equilateral(const EquilateralPlacement& p) {
    if (!(p.width > 0.0)) throw DomainError("equilateral triangle width must be positive");
    const auto v = equilateral_vertices(p);
    return make_polygon(v);
}

ConvexPolygon circumscribed_triangle(const ConvexPolygon&, const Indisk& d) {
    if (d.contact_case != ContactCase::ThreeAcute || d.contacts.size() != 3) {
        throw NotThreeContact("circumscribed triangle needs three acute contact points");
    }
    std::array<Point2, 3> normal;
    std::array<double, 3> offset{};
    for (std::size_t i = 0; i < 3; ++i) {
        const Point2 u = d.contacts[i] - d.center;
        normal[i] = u / norm(u);
        offset[i] = dot(normal[i], d.center) + d.radius;
    }
    std::array<Point2, 3> vertex;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t a = (i + 1) % 3;
        const std::size_t b = (i + 2) % 3;
        vertex[i] = line_intersection(normal[a], offset[a], normal[b], offset[b]);
    }
    return make_polygon(vertex);
}

Circumscription circumscribe(const ConvexPolygon& k) {
    const Indisk d = chebyshev_indisk(k);
    std::optional<Indisk> three = d.contact_case == ContactCase::ThreeAcute ? d : three_contact_indisk(d);
    if (!three) throw NotThreeContact("indisk contacts contain no acute triple");
    ConvexPolygon t = circumscribed_triangle(k, *three);
    TriangleMetrics m = triangle_metrics(t);
    return {std::move(*three), std::move(t), m};
}

double disk_triangle_hausdorff(double r_disk, double width_e) {
    if (!(r_disk > 0.0) || !(width_e > 0.0)) throw DomainError("radius and width must be positive");
    if (r_disk <= width_e / 2.0) return width_e * (2.0 / 3.0 - r_disk / width_e);
    return width_e * (r_disk / width_e - 1.0 / 3.0);
}

ConvexPolygon aligned_equilateral(const TriangleMetrics& t, double width_e) {
    const Point2 apex = t.vertices[0];
    const Point2 base_a = t.vertices[1];
    const Point2 base_b = t.vertices[2];
    const Point2 u = (base_b - base_a) / norm(base_b - base_a);
    const Point2 foot = base_a + dot(apex - base_a, u) * u;
    const Point2 up = (apex - foot) / norm(apex - foot);
    const double half_side = width_e / kSqrt3;
    const std::array<Point2, 3> e{foot + width_e * up, foot - half_side * u, foot + half_side * u};
    return make_polygon(e);
}

double triangle_hausdorff_bound(const TriangleMetrics& t, double width_e) {
    if (width_e > t.width * (1.0 + kDefaultTolerances.geom)) {
        throw InvalidWidth("equilateral width exceeds the triangle width");
    }
    return kSqrt3 * t.width / std::tan(t.angles[2]) - width_e;
}

double body_triangle_hausdorff_bound(const TriangleMetrics& t, double width_k) {
    const double s1 = t.sides[0];
    const double s3 = t.sides[2];
    const double h1 = t.heights[0];
    return (s1 - s3) + s3 * (h1 - width_k) / h1;
}

double asymmetry_upper_bound(const ConvexPolygon& k) {
    const double w = minimal_width(k).value;
    const TriangleMetrics t = circumscribe(k).metrics;
    return body_triangle_hausdorff_bound(t, w) / w + triangle_hausdorff_bound(t, w) / w;
}

}  // namespace palgeo
