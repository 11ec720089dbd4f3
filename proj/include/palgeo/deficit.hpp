#pragma once

#include "palgeo/convex_core.hpp"

namespace palgeo {

/// phi(x) = 3x^2 (pi/3 - acos(x/(1-x))) + 3x sqrt(1-2x), the sharp lower bound
/// of |K|/w^2 in terms of x = r/w. Domain [1/3, 1/2].
double phi(double x);

/// phi'(x) split as f(x) + g(x) with f(x) = 6x (pi/3 - acos(x/(1-x))) and
/// g(x) = 3 (1-2x)^{3/2} / (1-x).
struct PhiDerivative {
    double f = 0.0;
    double g = 0.0;
    double value() const { return f + g; }
};

PhiDerivative phi_prime_split(double x);
double phi_prime(double x);

/// psi(x, y) for x = r/w in [1/3, 1/2] and y = m/w >= 1 - x.
double psi(double x, double y);

/// Largest distance from the indisk center to a point of k.
double m_of(const ConvexPolygon& k, const Indisk& d);

struct DeficitProfile {
    double width = 0.0;
    double inradius = 0.0;
    double m = 0.0;
    double area = 0.0;
    double pal_deficit = 0.0;  // area / w^2 - 1/sqrt(3)
    double eta = 0.0;          // r / w - 1/3
    double phi_bound = 0.0;    // phi(r / w)
    double psi_bound = 0.0;    // psi(r / w, m / w)
    Point2 center;             // indisk center used for m
};

DeficitProfile profile(const ConvexPolygon& k);

/// r (w(T) - w(K)) / (w(K) w(T)) + (s1 - s3) / (3 (s1 + s2 + s3)) from the
/// circumscribed triangle T of k; a lower bound for eta(k).
double refined_eta_lower_bound(const ConvexPolygon& k);

/// Area between a disk of radius r and the two tangent segments from a point
/// at distance d from its center: r sqrt(d^2 - r^2) - r^2 acos(r / d).
double curved_triangle_area(double r, double d);

}  // namespace palgeo
