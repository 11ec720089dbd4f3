#include "palgeo/asymmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "kernels.hpp"
#include "palgeo/convex_core.hpp"
#include "palgeo/errors.hpp"

namespace palgeo {

namespace {

constexpr double kThetaPeriod = 2.0 * std::numbers::pi / 3.0;
constexpr double kUnitTriangleArea = 1.0 / std::numbers::sqrt3;
constexpr double kInvPhi = 0.6180339887498949;
constexpr std::size_t kScreenCandidates = 12;
constexpr std::size_t kFinalCandidates = 4;
constexpr std::size_t kMaxSlides = 8;
constexpr double kMidTolerance = 1e-6;
constexpr std::size_t kInnerIterationCap = 200;

enum class Objective { Hausdorff, Fraenkel };

struct Minimum {
    double x = 0.0;
    double f = 0.0;
};

template <class F>
Minimum golden_min(F&& f, double a, double b, double tol, std::size_t max_iter, bool& converged) {
    if (b - a <= tol) {
        const double m = 0.5 * (a + b);
        return {m, f(m)};
    }
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (std::size_t it = 0; b - a > tol && it < max_iter; ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    if (b - a > tol) converged = false;
    return fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
}

// Vertical extent of a convex counterclockwise polygon at abscissa x.
std::pair<double, double> chord(std::span<const Point2> poly, double x) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[i + 1 == n ? 0 : i + 1];
        const double x0 = std::min(a.x, b.x);
        const double x1 = std::max(a.x, b.x);
        if (x < x0 || x > x1) continue;
        double y;
        if (x1 - x0 <= 0.0) {
            lo = std::min({lo, a.y, b.y});
            hi = std::max({hi, a.y, b.y});
            continue;
        }
        y = a.y + (x - a.x) / (b.x - a.x) * (b.y - a.y);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    if (lo > hi) {
        // x fell outside by rounding; collapse onto the nearest vertex column
        const auto it = std::min_element(poly.begin(), poly.end(), [x](Point2 p, Point2 q) {
            return std::abs(p.x - x) < std::abs(q.x - x);
        });
        return {it->y, it->y};
    }
    return {lo, hi};
}

struct StratumResult {
    double score = 0.0;
    Point2 center;
};

// Searches placements of a width-1 equilateral triangle against a body that
// has been normalized to width 1. Scores are minimized: the Hausdorff
// distance itself, or minus the square root of the overlap area, which is
// concave in the center on the overlap region.
class PlacementSearch {
public:
    PlacementSearch(Objective obj, std::vector<Point2> body) : obj_(obj), body_(std::move(body)) {
        body_area_ = detail::signed_area(body_);
        sums_.reserve(3 * body_.size());
    }

    std::size_t evaluations() const { return evaluations_; }

    double value_from_score(double score) const {
        if (obj_ == Objective::Hausdorff) return score;
        return std::max(0.0, body_area_ + kUnitTriangleArea - 2.0 * score * score);
    }

    // Best center for rotation theta, searched over K + (-E_theta): the
    // centers whose triangle meets the body. Optimal triangles always do.
    StratumResult solve(double theta, double tol, bool& converged) {
        set_theta(theta);
        const std::span<const Point2> m = domain_.points();
        double xmin = m[0].x;
        double xmax = m[0].x;
        for (const Point2& p : m) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
        }
        // Golden section only returns the abscissa, so keep the best point
        // seen; it is never worse than the final bracket's.
        StratumResult best{std::numeric_limits<double>::infinity(), {}};
        golden_min(
            [&](double x) {
                const auto [ylo, yhi] = chord(m, x);
                const Minimum r = golden_min([&](double y) { return score({x, y}); }, ylo, yhi, tol,
                                             kInnerIterationCap, converged);
                if (r.f < best.score) best = {r.f, {x, r.x}};
                return r.f;
            },
            xmin, xmax, tol, kInnerIterationCap, converged);
        return best;
    }

private:
    void set_theta(double theta) {
        tri0_ = equilateral_vertices({{0.0, 0.0}, theta, 1.0});
        sums_.clear();
        for (const Point2& k : body_) {
            for (const Point2& e : tri0_) sums_.push_back(k - e);
        }
        domain_ = make_polygon(sums_);
    }

    double score(Point2 c) {
        ++evaluations_;
        const std::array<Point2, 3> tri{tri0_[0] + c, tri0_[1] + c, tri0_[2] + c};
        if (obj_ == Objective::Hausdorff) {
            return std::max(detail::directed_hausdorff(body_, tri), detail::directed_hausdorff(tri, body_));
        }
        return -std::sqrt(detail::convex_intersection_area(body_, tri, buf_a_, buf_b_));
    }

    Objective obj_;
    std::vector<Point2> body_;
    double body_area_ = 0.0;
    std::array<Point2, 3> tri0_{};
    std::vector<Point2> sums_;
    ConvexPolygon domain_ = make_polygon({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
    std::vector<Point2> buf_a_, buf_b_;
    std::size_t evaluations_ = 0;
};

double reduce_theta(double theta) {
    double t = std::fmod(theta, kThetaPeriod);
    if (t < 0.0) t += kThetaPeriod;
    if (t >= kThetaPeriod) t = 0.0;
    return t;
}

void require_width(const ConvexPolygon& k, const EquilateralPlacement& p, double w) {
    if (!(std::abs(p.width - w) <= 1e-9 * w)) {
        throw WidthMismatch("placement width " + std::to_string(p.width) + " differs from body width " +
                            std::to_string(w));
    }
    (void)k;
}

void validate(const OptimizerConfig& cfg) {
    if (cfg.theta_samples < 1 || cfg.translation_grid < 2 || cfg.refine_iterations < 1 || !(cfg.tau_opt > 0.0)) {
        throw DomainError("invalid optimizer configuration");
    }
}

AsymmetryResult optimize(const ConvexPolygon& k, const OptimizerConfig& cfg, Objective obj) {
    validate(cfg);
    const double w = minimal_width(k).value;
    const Point2 origin = centroid(k);
    std::vector<Point2> body;
    body.reserve(k.size());
    for (const Point2& v : k) body.push_back((v - origin) / w);

    // Lipschitz constants of the normalized objective in the center and in
    // the rotation; vertices of a width-1 triangle sit 2/3 from its center.
    const double lip_center = obj == Objective::Hausdorff ? 1.0 : 4.0 / std::numbers::sqrt3;
    const double lip_theta = obj == Objective::Hausdorff ? 2.0 / 3.0 : 4.0 / std::numbers::sqrt3;

    PlacementSearch search(obj, body);
    const double extent = diameter(k) / w + 4.0 / 3.0;
    const double g = static_cast<double>(cfg.translation_grid - 1);
    const double tol_screen = extent / (g * g);
    const double tol_fine = 0.1 * cfg.tau_opt;
    const double tol_mid = std::max(kMidTolerance, tol_fine);

    const std::size_t strata = cfg.theta_samples;
    const double dtheta = kThetaPeriod / static_cast<double>(strata);
    std::vector<StratumResult> screen(strata);
    std::vector<double> screen_value(strata);
    bool screen_converged = true;
    for (std::size_t s = 0; s < strata; ++s) {
        screen[s] = search.solve(static_cast<double>(s) * dtheta, tol_screen, screen_converged);
        screen_value[s] = search.value_from_score(screen[s].score);
    }

    // Lower bound over all rotations from the screened strata.
    const double screen_slack = lip_center * 3.0 * tol_screen;
    double lower = std::numeric_limits<double>::infinity();
    for (double v : screen_value) lower = std::min(lower, v - screen_slack);
    lower -= lip_theta * dtheta / 2.0;

    // Local minima of the screened profile that the screen cannot rule out.
    const double best_screen = *std::min_element(screen_value.begin(), screen_value.end());
    std::vector<std::size_t> candidates;
    for (std::size_t s = 0; s < strata; ++s) {
        const double prev = screen_value[(s + strata - 1) % strata];
        const double next = screen_value[(s + 1) % strata];
        const bool local_min = screen_value[s] <= prev && screen_value[s] <= next;
        if (local_min && screen_value[s] <= best_screen + 2.0 * screen_slack) candidates.push_back(s);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return screen_value[a] < screen_value[b]; });
    if (candidates.size() > kScreenCandidates) candidates.resize(kScreenCandidates);

    struct Refined {
        std::size_t stratum;
        double value;
        double theta;
        Point2 center;
    };
    bool refine_converged = true;
    // Golden search over a rotation window that slides along while the
    // optimum keeps landing on one of its ends.
    auto refine = [&](std::size_t stratum, double lo, double hi, double tol) {
        Refined best{stratum, std::numeric_limits<double>::infinity(), lo, {}};
        double best_score = std::numeric_limits<double>::infinity();
        const double half = 0.5 * (hi - lo);
        for (std::size_t slide = 0; slide <= kMaxSlides; ++slide) {
            golden_min(
                [&](double theta) {
                    const StratumResult r = search.solve(theta, tol, refine_converged);
                    if (r.score < best_score) {
                        best_score = r.score;
                        best.theta = theta;
                        best.center = r.center;
                    }
                    return r.score;
                },
                lo, hi, tol, cfg.refine_iterations, refine_converged);
            const double edge = std::max(4.0 * tol, 0.02 * (hi - lo));
            if (best.theta - lo > edge && hi - best.theta > edge) break;
            lo = best.theta - half;
            hi = best.theta + half;
        }
        best.value = search.value_from_score(best_score);
        return best;
    };

    // Two refinement levels: every candidate to a moderate tolerance over its
    // neighbouring strata, then the best few to tau_opt around their optima.
    std::vector<Refined> coarse;
    for (std::size_t s : candidates) {
        const double theta0 = static_cast<double>(s) * dtheta;
        coarse.push_back(refine(s, theta0 - dtheta, theta0 + dtheta, tol_mid));
    }
    std::stable_sort(coarse.begin(), coarse.end(), [](const Refined& a, const Refined& b) {
        return a.value < b.value || (a.value == b.value && a.stratum < b.stratum);
    });
    // Moderate-tolerance values are only ranked up to the centre error.
    while (!coarse.empty() && coarse.back().value > coarse.front().value + 4.0 * lip_center * tol_mid) {
        coarse.pop_back();
    }
    if (coarse.size() > kFinalCandidates) coarse.resize(kFinalCandidates);

    std::size_t best_stratum = 0;
    for (std::size_t s = 1; s < strata; ++s) {
        if (screen_value[s] < screen_value[best_stratum]) best_stratum = s;
    }
    Refined best{best_stratum, screen_value[best_stratum], static_cast<double>(best_stratum) * dtheta,
                 screen[best_stratum].center};
    auto consider = [&](const Refined& r) {
        if (r.value < best.value || (r.value == best.value && r.stratum < best.stratum)) best = r;
    };
    for (const Refined& c : coarse) {
        consider(c);
        const double window = 0.5 * dtheta;
        consider(refine(c.stratum, c.theta - window, c.theta + window, tol_fine));
    }
    const double best_theta = best.theta;
    const Point2 best_center = best.center;

    AsymmetryResult result;
    result.optimal = {origin + w * best_center, reduce_theta(best_theta), w};
    result.value = obj == Objective::Hausdorff ? hausdorff_objective(k, result.optimal)
                                               : fraenkel_objective(k, result.optimal);
    result.evaluations = search.evaluations() + 1;
    result.converged = refine_converged;
    result.certificate_gap = std::max(0.0, result.value - lower);
    return result;
}

}  // namespace

double hausdorff_objective(const ConvexPolygon& k, const EquilateralPlacement& p) {
    const double w = minimal_width(k).value;
    require_width(k, p, w);
    return hausdorff(k, equilateral(p)) / w;
}

double fraenkel_objective(const ConvexPolygon& k, const EquilateralPlacement& p) {
    const double w = minimal_width(k).value;
    require_width(k, p, w);
    return symmetric_difference_area(k, equilateral(p)) / (w * w);
}

AsymmetryResult alpha(const ConvexPolygon& k, const OptimizerConfig& cfg) {
    return optimize(k, cfg, Objective::Hausdorff);
}

AsymmetryResult fraenkel(const ConvexPolygon& k, const OptimizerConfig& cfg) {
    return optimize(k, cfg, Objective::Fraenkel);
}

double beta_from_alpha(double alpha_value) { return std::min(alpha_value, 1.0 / 6.0); }

double beta(const ConvexPolygon& k, const OptimizerConfig& cfg) { return beta_from_alpha(alpha(k, cfg).value); }

}  // namespace palgeo
