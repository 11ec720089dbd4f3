#include <doctest.h>

#include <cmath>
#include <numbers>

#include "palgeo/asymmetry.hpp"
#include "palgeo/convex_core.hpp"
#include "palgeo/deficit.hpp"
#include "palgeo/errors.hpp"
#include "palgeo/shapes.hpp"

using namespace palgeo;
using doctest::Approx;

namespace {
const double kSqrt3 = std::numbers::sqrt3;
const OptimizerConfig kDefault{};
}  // namespace

TEST_CASE("hausdorff objective") {
    const EquilateralPlacement p{{0.3, -0.2}, 0.5, 1.7};
    const ConvexPolygon e = equilateral(p);
    CHECK(hausdorff_objective(e, p) == Approx(0.0).epsilon(1e-12));

    const ConvexPolygon disk = regular_ngon(256, 0.5);
    const double w = minimal_width(disk).value;
    CHECK(std::abs(hausdorff_objective(disk, {{0, 0}, 0.0, w}) - 1.0 / 6.0) < 2e-3);

    const double eps = 0.07;
    const ConvexPolygon k = isosceles_family(eps);
    CHECK(hausdorff_objective(k, {{0, 1.0 / 3.0}, 0.0, 1.0}) == Approx(eps).epsilon(1e-12));
    CHECK_THROWS_AS(hausdorff_objective(k, {{0, 1.0 / 3.0}, 0.0, 1.1}), WidthMismatch);
}

TEST_CASE("fraenkel objective") {
    const double eps = 0.07;
    const ConvexPolygon k = isosceles_family(eps);
    CHECK(fraenkel_objective(k, {{0, 1.0 / 3.0}, 0.0, 1.0}) == Approx(eps).epsilon(1e-12));
    CHECK_THROWS_AS(fraenkel_objective(k, {{0, 1.0 / 3.0}, 0.0, 0.9}), WidthMismatch);
}

TEST_CASE("asymmetries vanish on equilateral triangles") {
    for (double rot : {0.0, 0.4, 2.0}) {
        const ConvexPolygon e = equilateral({{1.0, -3.0}, rot, 2.5});
        const AsymmetryResult a = alpha(e);
        const AsymmetryResult f = fraenkel(e);
        CHECK(a.value <= kDefault.tau_opt);
        CHECK(f.value <= kDefault.tau_opt);
        CHECK(beta(e) <= kDefault.tau_opt);
        CHECK(a.converged);
        CHECK(a.certificate_gap >= 0.0);
        CHECK(distance(a.optimal.center, {1.0, -3.0}) < 1e-8);
    }
}

TEST_CASE("asymmetries are positive away from equilateral triangles") {
    for (const ConvexPolygon& k : {triangle_from_sides(1, 1, 1.01), rectangle(1, 1.2), random_convex(10, 1)}) {
        CHECK(alpha(k).value > 1e-4);
        CHECK(fraenkel(k).value > 1e-4);
    }
}

TEST_CASE("asymmetry of a disk stand-in") {
    const ConvexPolygon disk = regular_ngon(256, 0.5);
    const AsymmetryResult a = alpha(disk);
    CHECK(std::abs(a.value - 1.0 / 6.0) < 2e-3);
    CHECK(std::abs(beta_from_alpha(a.value) - 1.0 / 6.0) < 2e-3);
}

TEST_CASE("asymmetries of the isosceles family") {
    for (double eps : {0.1, 0.05, 0.01}) {
        const ConvexPolygon k = isosceles_family(eps);
        CHECK(std::abs(alpha(k).value - eps) < 1e-4);
        CHECK(std::abs(fraenkel(k).value - eps) < 1e-4);
    }
}

TEST_CASE("beta truncates elongated rectangles") {
    const ConvexPolygon r = rectangle(1, 10);
    const AsymmetryResult a = alpha(r);
    CHECK(a.value > 1.0 / 6.0);
    CHECK(beta(r) == 1.0 / 6.0);
}

TEST_CASE("reported value reproduces at the optimal placement") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ConvexPolygon k = random_convex(12, seed);
        const AsymmetryResult a = alpha(k);
        const AsymmetryResult f = fraenkel(k);
        CHECK(std::abs(hausdorff_objective(k, a.optimal) - a.value) <= kDefault.tau_opt);
        CHECK(std::abs(fraenkel_objective(k, f.optimal) - f.value) <= kDefault.tau_opt);
        CHECK(a.optimal.rotation >= 0.0);
        CHECK(a.optimal.rotation < 2 * std::numbers::pi / 3);
        CHECK(a.evaluations > 0);
    }
}

TEST_CASE("asymmetries are invariant under similarity") {
    for (std::uint64_t seed = 10; seed < 14; ++seed) {
        const ConvexPolygon k = random_convex(15, seed);
        const ConvexPolygon m = translated(rotated(scaled(k, 3.7), 1.1 + 0.3 * seed), {-4.0, 2.5});
        CHECK(alpha(m).value == Approx(alpha(k).value).epsilon(10 * kDefault.tau_opt));
        CHECK(fraenkel(m).value == Approx(fraenkel(k).value).epsilon(10 * kDefault.tau_opt));
    }
}

TEST_CASE("refining the budget does not raise the value") {
    OptimizerConfig fine;
    fine.theta_samples = 2 * kDefault.theta_samples;
    fine.translation_grid = 2 * kDefault.translation_grid;
    for (std::uint64_t seed = 20; seed < 23; ++seed) {
        const ConvexPolygon k = random_convex(10, seed);
        CHECK(alpha(k, fine).value <= alpha(k).value + kDefault.tau_opt);
        CHECK(fraenkel(k, fine).value <= fraenkel(k).value + kDefault.tau_opt);
    }
}

TEST_CASE("equivalence sandwich and deficit bound") {
    const double upper = 3 * kSqrt3 + 2;
    const double lower = 1 / (25 * std::sqrt(5.0));
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        const ConvexPolygon k = random_convex(8 + seed, seed);
        const AsymmetryResult a = alpha(k);
        const AsymmetryResult f = fraenkel(k);
        CHECK(f.value - f.certificate_gap <= upper * a.value);
        CHECK(lower * (a.value - a.certificate_gap) <= f.value);
        CHECK(f.value >= profile(k).pal_deficit - 1e-12);
    }
}

TEST_CASE("invalid configuration") {
    OptimizerConfig bad;
    bad.theta_samples = 0;
    CHECK_THROWS_AS(alpha(rectangle(1, 1), bad), DomainError);
}
