#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lp.hpp"
#include "palgeo/convex_core.hpp"
#include "palgeo/errors.hpp"

namespace palgeo {

namespace detail {

LpSolution simplex_maximize(const std::vector<double>& a, const std::vector<double>& b,
                            const std::vector<double>& c) {
    constexpr double eps = 1e-13;
    const std::size_t cols = c.size();
    const std::size_t rows = b.size();

    // Basic row i: x_basic[i] = rhs[i] - sum_j t[i][j] * x_nonbasic[j].
    // Objective:   z = z0 + sum_j d[j] * x_nonbasic[j].
    std::vector<double> t = a;
    std::vector<double> rhs = b;
    std::vector<double> d = c;
    double z0 = 0.0;
    std::vector<std::size_t> nonbasic(cols);
    std::vector<std::size_t> basic(rows);
    for (std::size_t j = 0; j < cols; ++j) nonbasic[j] = j;
    for (std::size_t i = 0; i < rows; ++i) basic[i] = cols + i;

    const std::size_t max_pivots = 100 * (rows + cols) + 1000;
    for (std::size_t pivots = 0;; ++pivots) {
        if (pivots > max_pivots) throw std::runtime_error("simplex failed to terminate");

        std::size_t s = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (d[j] > eps && (s == cols || nonbasic[j] < nonbasic[s])) s = j;
        }
        if (s == cols) break;

        std::size_t r = rows;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            const double coef = t[i * cols + s];
            if (coef <= eps) continue;
            const double ratio = std::max(0.0, rhs[i]) / coef;
            if (r == rows || ratio < best_ratio || (ratio == best_ratio && basic[i] < basic[r])) {
                r = i;
                best_ratio = ratio;
            }
        }
        if (r == rows) throw std::runtime_error("linear program is unbounded");

        const double p = t[r * cols + s];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = t[i * cols + s] / p;
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j != s) t[i * cols + j] -= f * t[r * cols + j];
            }
            rhs[i] -= f * rhs[r];
            t[i * cols + s] = -f;
        }
        const double fd = d[s] / p;
        for (std::size_t j = 0; j < cols; ++j) {
            if (j != s) d[j] -= fd * t[r * cols + j];
        }
        z0 += fd * rhs[r];
        d[s] = -fd;
        for (std::size_t j = 0; j < cols; ++j) {
            if (j != s) t[r * cols + j] /= p;
        }
        rhs[r] /= p;
        t[r * cols + s] = 1.0 / p;
        std::swap(basic[r], nonbasic[s]);
    }

    LpSolution out;
    out.x.assign(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basic[i] < cols) out.x[basic[i]] = rhs[i];
    }
    out.objective = z0;
    return out;
}

}  // namespace detail

namespace {

struct HalfPlane {
    Point2 normal;  // outward unit normal
    double offset;  // normal . x <= offset
};

// Solves max over (q, rho) of rho with n_i.q + rho <= rhs_i after shifting
// the origin to an interior point; free coordinates are split into +/- parts.
struct Frame {
    Point2 origin;
    double scale;
    std::vector<HalfPlane> planes;  // in normalized coordinates
};

Frame normalized_frame(const ConvexPolygon& k) {
    Point2 origin;
    for (const Point2& p : k) origin = origin + p;
    origin = origin / static_cast<double>(k.size());
    const double scale = diameter(k);
    Frame f{origin, scale, {}};
    f.planes.reserve(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        const Point2 a = (k.vertex(i) - origin) / scale;
        const Point2 b = (k.vertex(i + 1) - origin) / scale;
        const Point2 e = b - a;
        const Point2 n = Point2{e.y, -e.x} / norm(e);
        f.planes.push_back({n, dot(n, a)});
    }
    return f;
}

Point2 solve_center(const std::vector<HalfPlane>& planes, Point2 at, double radius, double slack,
                    bool minimize_x, std::optional<double> x_cap) {
    const std::size_t rows = planes.size() + (x_cap ? 1 : 0);
    std::vector<double> a;
    std::vector<double> b;
    a.reserve(rows * 4);
    for (const HalfPlane& h : planes) {
        a.insert(a.end(), {h.normal.x, -h.normal.x, h.normal.y, -h.normal.y});
        b.push_back(std::max(0.0, h.offset - dot(h.normal, at) - radius + slack));
    }
    if (x_cap) {
        a.insert(a.end(), {1.0, -1.0, 0.0, 0.0});
        b.push_back(std::max(0.0, *x_cap - at.x));
    }
    const std::vector<double> c = minimize_x ? std::vector<double>{-1.0, 1.0, 0.0, 0.0}
                                             : std::vector<double>{0.0, 0.0, -1.0, 1.0};
    const auto sol = detail::simplex_maximize(a, b, c);
    return at + Point2{sol.x[0] - sol.x[1], sol.x[2] - sol.x[3]};
}

double normal_angle(Point2 n) {
    const double a = std::atan2(n.y, n.x);
    return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
}

// Largest gap between consecutive sorted angles on the circle.
double max_gap(std::span<const double> sorted_angles) {
    double gap = 2.0 * std::numbers::pi - (sorted_angles.back() - sorted_angles.front());
    for (std::size_t i = 1; i < sorted_angles.size(); ++i) gap = std::max(gap, sorted_angles[i] - sorted_angles[i - 1]);
    return gap;
}

}  // namespace

Indisk chebyshev_indisk(const ConvexPolygon& k) {
    const Frame f = normalized_frame(k);

    std::vector<double> a;
    std::vector<double> b;
    a.reserve(f.planes.size() * 5);
    for (const HalfPlane& h : f.planes) {
        a.insert(a.end(), {h.normal.x, -h.normal.x, h.normal.y, -h.normal.y, 1.0});
        b.push_back(h.offset);
    }
    const auto sol = detail::simplex_maximize(a, b, {0.0, 0.0, 0.0, 0.0, 1.0});
    const double rho = sol.x[4];
    Point2 q{sol.x[0] - sol.x[1], sol.x[2] - sol.x[3]};

    auto active_normals = [&](Point2 center) {
        std::vector<Point2> normals;
        for (const HalfPlane& h : f.planes) {
            if (h.offset - dot(h.normal, center) - rho <= kContactTolerance) normals.push_back(h.normal);
        }
        std::sort(normals.begin(), normals.end(),
                  [](Point2 u, Point2 v) { return normal_angle(u) < normal_angle(v); });
        return normals;
    };
    auto has_opposite_pair = [](const std::vector<Point2>& normals) {
        for (std::size_t i = 0; i < normals.size(); ++i) {
            for (std::size_t j = i + 1; j < normals.size(); ++j) {
                if (norm(normals[i] + normals[j]) < kContactTolerance) return true;
            }
        }
        return false;
    };

    // A pair of opposite contacts is the only way the optimal centers can form
    // a segment; pick its lexicographically smallest point.
    if (has_opposite_pair(active_normals(q))) {
        const double slack = kDefaultTolerances.geom;
        const Point2 q2 = solve_center(f.planes, q, rho, slack, true, std::nullopt);
        q = solve_center(f.planes, q2, rho, slack, false, q2.x + slack);
    }

    const std::vector<Point2> normals = active_normals(q);
    Indisk d;
    d.center = f.origin + f.scale * q;
    d.radius = f.scale * rho;
    for (const Point2& n : normals) d.active_contacts.push_back(d.center + d.radius * n);

    // Diametral pairs take precedence (rectangles, disks).
    for (std::size_t i = 0; i < normals.size() && d.contacts.empty(); ++i) {
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            if (norm(normals[i] + normals[j]) < kContactTolerance) {
                d.contacts = {d.active_contacts[i], d.active_contacts[j]};
                d.contact_case = ContactCase::TwoDiametral;
                break;
            }
        }
    }
    if (!d.contacts.empty()) return d;

    if (auto three = three_contact_indisk(d)) return *three;

    // Optimality puts the origin in the convex hull of the active normals, so
    // without an acute triple the nearest-to-opposite pair is diametral up to
    // rounding.
    std::size_t bi = 0;
    std::size_t bj = normals.size() > 1 ? 1 : 0;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            if (norm(normals[i] + normals[j]) < norm(normals[bi] + normals[bj])) {
                bi = i;
                bj = j;
            }
        }
    }
    d.contacts = {d.active_contacts[bi], d.active_contacts[bj]};
    d.contact_case = ContactCase::TwoDiametral;
    return d;
}

std::optional<Indisk> three_contact_indisk(const Indisk& d) {
    const std::size_t m = d.active_contacts.size();
    if (m < 3) return std::nullopt;
    std::vector<double> angles(m);
    for (std::size_t i = 0; i < m; ++i) angles[i] = normal_angle(d.active_contacts[i] - d.center);

    constexpr double acute_margin = 1e-9;
    std::array<std::size_t, 3> best{};
    double best_min_gap = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t l = j + 1; l < m; ++l) {
                const std::array<double, 3> tri{angles[i], angles[j], angles[l]};
                if (max_gap(tri) >= std::numbers::pi - acute_margin) continue;
                const double min_gap = std::min({tri[1] - tri[0], tri[2] - tri[1], 2.0 * std::numbers::pi - (tri[2] - tri[0])});
                if (min_gap > best_min_gap + acute_margin) {
                    best_min_gap = min_gap;
                    best = {i, j, l};
                }
            }
        }
    }
    if (best_min_gap < 0.0) return std::nullopt;

    Indisk out = d;
    out.contacts = {d.active_contacts[best[0]], d.active_contacts[best[1]], d.active_contacts[best[2]]};
    out.contact_case = ContactCase::ThreeAcute;
    return out;
}

}  // namespace palgeo
