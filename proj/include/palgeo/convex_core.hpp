#pragma once

#include <optional>
#include <vector>

#include "palgeo/convex_polygon.hpp"
#include "palgeo/point.hpp"

namespace palgeo {

enum class ContactCase { TwoDiametral, ThreeAcute };

/// Largest inscribed disk of a polygon.
///
/// `contacts` holds the defining configuration: the two opposite tangency
/// points for TwoDiametral, or three tangency points forming an acute
/// triangle for ThreeAcute. `active_contacts` holds every tangency point,
/// sorted by the angle of its outward normal.
struct Indisk {
    Point2 center;
    double radius = 0.0;
    std::vector<Point2> contacts;
    ContactCase contact_case = ContactCase::ThreeAcute;
    std::vector<Point2> active_contacts;
};

struct Width {
    double value = 0.0;
    double direction = 0.0;  // projection direction in [0, pi)
};

double area(const ConvexPolygon& k);
double perimeter(const ConvexPolygon& k);
double diameter(const ConvexPolygon& k);
Point2 centroid(const ConvexPolygon& k);

/// Length of the projection of `k` onto the direction (cos theta, sin theta).
double directional_width(const ConvexPolygon& k, double theta);

/// Minimal width by rotating calipers over edge/vertex antipodal pairs.
/// Ties between directions are broken towards the smallest angle.
Width minimal_width(const ConvexPolygon& k);

/// Largest inscribed circle via the linear program
///   maximize r  subject to  n_i . c + r <= n_i . v_i  for every edge i.
/// When the optimal centers form a segment the lexicographically smallest
/// one is returned.
Indisk chebyshev_indisk(const ConvexPolygon& k);

/// Three active contacts forming an acute triangle, if the indisk has any.
/// Returns the balanced triple (largest minimum angular gap).
std::optional<Indisk> three_contact_indisk(const Indisk& d);

double point_to_body_distance(Point2 p, const ConvexPolygon& k);

/// max over vertices of `from` of the distance to `to`.
double directed_hausdorff(const ConvexPolygon& from, const ConvexPolygon& to);
double hausdorff(const ConvexPolygon& k, const ConvexPolygon& j);

/// True iff k is contained in the closed eps-neighborhood of j.
bool neighborhood_contains(const ConvexPolygon& k, const ConvexPolygon& j, double eps);

/// Inner parallel set (k)_{-eps}. Throws EmptyErosion when eps >= r(k).
ConvexPolygon erode(const ConvexPolygon& k, double eps);

std::optional<ConvexPolygon> intersection(const ConvexPolygon& k, const ConvexPolygon& j);
double intersection_area(const ConvexPolygon& k, const ConvexPolygon& j);
double symmetric_difference_area(const ConvexPolygon& k, const ConvexPolygon& j);

ConvexPolygon scaled(const ConvexPolygon& k, double factor);
ConvexPolygon translated(const ConvexPolygon& k, Point2 offset);
ConvexPolygon rotated(const ConvexPolygon& k, double angle);

}  // namespace palgeo
