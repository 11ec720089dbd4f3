#include "palgeo/deficit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "palgeo/errors.hpp"
#include "palgeo/triangle_geometry.hpp"

namespace palgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClamp = 1e-12;
// Floating drift tolerated on r/w and m/w before profile() clamps them into
// the domains of phi and psi.
constexpr double kProfileDrift = 1e-9;

double clamped_acos(double v) {
    if (v > 1.0 + kClamp || v < -1.0 - kClamp) throw DomainError("acos argument out of range");
    return std::acos(std::clamp(v, -1.0, 1.0));
}

double clamped_sqrt(double v) {
    if (v < -kClamp) throw DomainError("negative square root argument");
    return std::sqrt(std::max(v, 0.0));
}

double check_x(double x, bool open) {
    const double lo = 1.0 / 3.0;
    const double hi = 0.5;
    if (!std::isfinite(x) || x < lo - kClamp || x > hi + kClamp) {
        throw DomainError("argument must lie in [1/3, 1/2]");
    }
    if (open && (x <= lo || x >= hi)) throw DomainError("argument must lie in (1/3, 1/2)");
    return std::clamp(x, lo, hi);
}

}  // namespace

double phi(double x) {
    x = check_x(x, false);
    return 3.0 * x * x * (kPi / 3.0 - clamped_acos(x / (1.0 - x))) + 3.0 * x * clamped_sqrt(1.0 - 2.0 * x);
}

PhiDerivative phi_prime_split(double x) {
    x = check_x(x, true);
    const double s = clamped_sqrt(1.0 - 2.0 * x);
    return {6.0 * x * (kPi / 3.0 - clamped_acos(x / (1.0 - x))), 3.0 * s * s * s / (1.0 - x)};
}

double phi_prime(double x) { return phi_prime_split(x).value(); }

double psi(double x, double y) {
    x = check_x(x, false);
    if (!std::isfinite(y) || y < 1.0 - x - kClamp) throw DomainError("psi requires y >= 1 - x");
    y = std::max(y, 1.0 - x);
    return kPi * x * x + 2.0 * x * clamped_sqrt(1.0 - 2.0 * x) - 2.0 * x * x * clamped_acos(x / (1.0 - x)) +
           x * clamped_sqrt(y * y - x * x) - x * x * clamped_acos(x / y);
}

double m_of(const ConvexPolygon& k, const Indisk& d) {
    double m = 0.0;
    for (const Point2& v : k) m = std::max(m, distance(v, d.center));
    return m;
}

DeficitProfile profile(const ConvexPolygon& k) {
    const Indisk d = chebyshev_indisk(k);
    DeficitProfile p;
    p.width = minimal_width(k).value;
    p.inradius = d.radius;
    p.m = m_of(k, d);
    p.area = area(k);
    p.center = d.center;
    p.pal_deficit = p.area / (p.width * p.width) - 1.0 / std::numbers::sqrt3;
    p.eta = p.inradius / p.width - 1.0 / 3.0;

    double x = p.inradius / p.width;
    if (x < 1.0 / 3.0 - kProfileDrift || x > 0.5 + kProfileDrift) {
        throw DomainError("r/w outside [1/3, 1/2]: " + std::to_string(x));
    }
    x = std::clamp(x, 1.0 / 3.0, 0.5);
    double y = p.m / p.width;
    if (y < 1.0 - x - kProfileDrift) throw DomainError("m/w below 1 - r/w: " + std::to_string(y));
    y = std::max(y, 1.0 - x);
    p.phi_bound = phi(x);
    p.psi_bound = psi(x, y);
    return p;
}

double refined_eta_lower_bound(const ConvexPolygon& k) {
    const Circumscription c = circumscribe(k);
    const double w = minimal_width(k).value;
    const double r = c.indisk.radius;
    const double wt = c.metrics.width;
    const auto& s = c.metrics.sides;
    return r * (wt - w) / (w * wt) + (s[0] - s[2]) / (3.0 * (s[0] + s[1] + s[2]));
}

double curved_triangle_area(double r, double d) {
    if (!(r > 0.0) || !std::isfinite(d)) throw DomainError("curved triangle needs r > 0");
    if (d < r * (1.0 - kClamp)) throw DomainError("apex lies inside the disk");
    d = std::max(d, r);
    return r * std::sqrt(d * d - r * r) - r * r * std::acos(std::min(1.0, r / d));
}

}  // namespace palgeo
