#pragma once

#include <array>

#include "palgeo/convex_core.hpp"

namespace palgeo {

/// Sorted metrics of a triangle. Index j pairs side s_j with the opposite
/// vertex V_j, its angle gamma_j and height h_j, so s1 >= s2 >= s3,
/// h1 <= h2 <= h3 and gamma1 >= gamma2 >= gamma3.
struct TriangleMetrics {
    std::array<double, 3> sides{};
    std::array<double, 3> heights{};
    std::array<double, 3> angles{};
    std::array<Point2, 3> vertices{};
    double width = 0.0;  // h1, the smallest height
    double inradius = 0.0;
    double area = 0.0;
};

/// An equilateral triangle by barycenter, rotation and width. Rotation 0 puts
/// a vertex straight above the barycenter.
struct EquilateralPlacement {
    Point2 center;
    double rotation = 0.0;
    double width = 1.0;
};

TriangleMetrics triangle_metrics(const ConvexPolygon& t);

std::array<Point2, 3> equilateral_vertices(const EquilateralPlacement& p);
ConvexPolygon equilateral(const EquilateralPlacement& p);

/// Triangle cut out by the tangent lines to the indisk at its three contact
/// points. Requires d.contact_case == ThreeAcute.
ConvexPolygon circumscribed_triangle(const ConvexPolygon& k, const Indisk& d);

struct Circumscription {
    Indisk indisk;
    ConvexPolygon triangle;
    TriangleMetrics metrics;
};

/// Circumscribed triangle of k built from an acute contact triple of its
/// indisk. Throws NotThreeContact when the contacts admit none (rectangles).
Circumscription circumscribe(const ConvexPolygon& k);

/// Hausdorff distance between a disk of radius r_disk and a concentric
/// equilateral triangle of width width_e.
double disk_triangle_hausdorff(double r_disk, double width_e);

/// Equilateral triangle of width width_e with its base on the largest side of
/// t, centered under the foot of the smallest height, apex towards V1.
ConvexPolygon aligned_equilateral(const TriangleMetrics& t, double width_e);

/// sqrt(3) * w(T) / tan(gamma3) - w(E): dominates d_H(T, aligned E).
/// Throws InvalidWidth if width_e > t.width.
double triangle_hausdorff_bound(const TriangleMetrics& t, double width_e);

/// (s1 - s3) + s3 (h1 - w(K)) / h1 for the circumscribed triangle t of K.
double body_triangle_hausdorff_bound(const TriangleMetrics& t, double width_k);

/// Upper bound on the Hausdorff asymmetry from the circumscribed triangle:
/// the two bounds above, normalized by w(K). Throws NotThreeContact.
double asymmetry_upper_bound(const ConvexPolygon& k);

}  // namespace palgeo
