#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "palgeo/convex_core.hpp"
#include "palgeo/errors.hpp"
#include "palgeo/polygon_io.hpp"
#include "palgeo/shapes.hpp"

using namespace palgeo;
using doctest::Approx;

namespace {

const double kSqrt3 = std::numbers::sqrt3;

ConvexPolygon unit_square() { return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
ConvexPolygon unit_width_equilateral() { return make_polygon({{0, 1}, {-1 / kSqrt3, 0}, {1 / kSqrt3, 0}}); }

}  // namespace

TEST_CASE("make_polygon canonicalizes") {
    const ConvexPolygon sq = make_polygon({{1, 1}, {0, 1}, {0, 0}, {1, 0}});
    REQUIRE(sq.size() == 4);
    CHECK(sq[0] == Point2{0, 0});
    CHECK(sq[1] == Point2{1, 0});
    CHECK(sq[2] == Point2{1, 1});

    const ConvexPolygon tri = make_polygon({{0, 0}, {2, 0}, {1, 0.0}, {1, 1}});
    REQUIRE(tri.size() == 3);
    CHECK(tri[0] == Point2{0, 0});
    CHECK(tri[1] == Point2{2, 0});
    CHECK(tri[2] == Point2{1, 1});

    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}, {2, 2}}), DegenerateInput);
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}}), DegenerateInput);
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}, {0, NAN}}), DegenerateInput);
}

TEST_CASE("hull contains every input point") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point2> pts;
    for (int i = 0; i < 100; ++i) {
        const double r = std::sqrt(u(gen)), a = 2 * std::numbers::pi * u(gen);
        pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    const ConvexPolygon k = make_polygon(pts);
    CHECK(k.size() <= 100);
    for (const Point2& p : pts) CHECK(oracle::contains(k, p, 1e-12));
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(orient(k.vertex(i), k.vertex(i + 1), k.vertex(i + 2)) > 0.0);
}

TEST_CASE("area and perimeter") {
    CHECK(area(unit_square()) == Approx(1.0));
    CHECK(perimeter(unit_square()) == Approx(4.0));
    CHECK(area(unit_width_equilateral()) == Approx(1 / kSqrt3).epsilon(1e-14));
    CHECK(perimeter(unit_width_equilateral()) == Approx(2 * kSqrt3).epsilon(1e-14));
    const ConvexPolygon k = isosceles_family(0.05);
    CHECK(area(k) == Approx(1 / kSqrt3 + 0.05).epsilon(1e-14));
    const double eps = 0.01;
    CHECK(std::abs(perimeter(isosceles_family(eps)) - 2 * kSqrt3 * (1 + kSqrt3 / 2 * eps)) < 5e-4);
}

TEST_CASE("widths and diameter") {
    CHECK(directional_width(unit_square(), 0.0) == Approx(1.0));
    CHECK(directional_width(unit_square(), std::numbers::pi / 4) == Approx(std::sqrt(2.0)));
    const ConvexPolygon rect = rectangle(1, 3);
    CHECK(directional_width(rect, std::numbers::pi / 2) == Approx(3.0));
    CHECK(minimal_width(rect).value == Approx(1.0));
    CHECK(minimal_width(rect).direction == Approx(0.0));
    CHECK(minimal_width(unit_width_equilateral()).value == Approx(1.0).epsilon(1e-14));
    CHECK(diameter(unit_square()) == Approx(std::sqrt(2.0)));
    CHECK(diameter(unit_width_equilateral()) == Approx(2 / kSqrt3));
    CHECK(diameter(isosceles_family(0.1)) == Approx(2 / kSqrt3 + 0.2));
}

TEST_CASE("minimal width matches a dense direction grid") {
    for (std::uint32_t seed = 1; seed <= 5; ++seed) {
        const ConvexPolygon k = oracle::random_ngon_on_circle(32, seed);
        const Width w = minimal_width(k);
        const double grid = oracle::grid_min_width(k, 100000);
        const double dtheta = std::numbers::pi / 100000;
        CHECK(grid >= w.value - 1e-12);
        // The width function has a corner at its minimum, so the grid error
        // is first order: w is diam-Lipschitz in the direction.
        CHECK(grid - w.value <= diameter(k) * dtheta / 2);
        CHECK(directional_width(k, w.direction) == Approx(w.value).epsilon(1e-12));
    }
}

TEST_CASE("chebyshev indisk") {
    const Indisk e = chebyshev_indisk(unit_width_equilateral());
    CHECK(e.radius == Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(e.contact_case == ContactCase::ThreeAcute);
    CHECK(e.contacts.size() == 3);

    const Indisk sq = chebyshev_indisk(unit_square());
    CHECK(sq.radius == Approx(0.5));
    CHECK(sq.contact_case == ContactCase::TwoDiametral);
    REQUIRE(sq.contacts.size() == 2);
    const Point2 mid = (sq.contacts[0] + sq.contacts[1]) / 2.0;
    CHECK(distance(mid, sq.center) < 1e-12);

    // Non-unique center: the lexicographically smallest one.
    const Indisk rect = chebyshev_indisk(rectangle(1, 3));
    CHECK(rect.radius == Approx(0.5));
    CHECK(rect.center.x == Approx(0.5));
    CHECK(rect.center.y == Approx(0.5));

    const ConvexPolygon t345 = triangle_from_sides(3, 4, 5);
    const double oracle_r = 2 * oracle::shoelace(t345.vertices()) / 12.0;
    CHECK(chebyshev_indisk(t345).radius == Approx(oracle_r).epsilon(1e-12));
    CHECK(oracle_r == Approx(1.0));
}

TEST_CASE("indisk contacts lie on the boundary at distance r") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const ConvexPolygon k = random_convex(8 + seed % 30, seed);
        const Indisk d = chebyshev_indisk(k);
        const double scale = diameter(k);
        CHECK(oracle::contains(k, d.center));
        for (const Point2& c : d.contacts) {
            CHECK(std::abs(distance(c, d.center) - d.radius) < 1e-9 * scale);
            double best = 1e300;
            for (std::size_t i = 0; i < k.size(); ++i) {
                const Point2 a = k[i], b = k.vertex(i + 1);
                best = std::min(best, std::abs(orient(a, b, c)) / distance(a, b));
            }
            CHECK(best < 1e-9 * scale);
        }
        if (d.contact_case == ContactCase::ThreeAcute) {
            REQUIRE(d.contacts.size() == 3);
            for (int i = 0; i < 3; ++i) {
                const Point2 p = d.contacts[i], a = d.contacts[(i + 1) % 3], b = d.contacts[(i + 2) % 3];
                CHECK(dot(a - p, b - p) > 0.0);
            }
        } else {
            REQUIRE(d.contacts.size() == 2);
            CHECK(distance(d.contacts[0] + d.contacts[1], 2.0 * d.center) < 1e-9 * scale);
        }
    }
}

TEST_CASE("point to body distance") {
    CHECK(point_to_body_distance({0.5, 0.5}, unit_square()) == 0.0);
    CHECK(point_to_body_distance({2, 0.5}, unit_square()) == Approx(1.0));
    CHECK(point_to_body_distance({2, 2}, unit_square()) == Approx(std::sqrt(2.0)));
}

TEST_CASE("hausdorff distance") {
    CHECK(hausdorff(unit_square(), unit_square()) == 0.0);
    const ConvexPolygon small = regular_ngon(256, std::cos(std::numbers::pi / 256));
    const ConvexPolygon big = regular_ngon(256, 2 * std::cos(std::numbers::pi / 256));
    CHECK(std::abs(hausdorff(small, big) - 1.0) < 1e-3);

    // Disk of inradius 1/2 against a concentric equilateral triangle of width 1.
    const ConvexPolygon disk = regular_ngon(256, 0.5);
    const ConvexPolygon e = translated(unit_width_equilateral(), {0, -1.0 / 3.0});
    CHECK(std::abs(hausdorff(disk, e) - 1.0 / 6.0) < 2e-3);
}

TEST_CASE("hausdorff is a metric on random triples") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const ConvexPolygon a = random_convex(10, 3 * seed);
        const ConvexPolygon b = translated(random_convex(12, 3 * seed + 1), {0.3, 0.1});
        const ConvexPolygon c = random_convex(9, 3 * seed + 2, 1.5);
        CHECK(hausdorff(a, b) == hausdorff(b, a));
        CHECK(hausdorff(a, c) <= hausdorff(a, b) + hausdorff(b, c) + 1e-12);
        CHECK(hausdorff(a, b) > 0.0);
        CHECK(neighborhood_contains(a, b, hausdorff(a, b) + 1e-12));
        CHECK(neighborhood_contains(b, a, hausdorff(a, b) + 1e-12));
    }
}

TEST_CASE("erosion") {
    const ConvexPolygon sq = erode(unit_square(), 0.1);
    CHECK(area(sq) == Approx(0.64));
    CHECK(sq[0].x == Approx(0.1));
    CHECK(sq[0].y == Approx(0.1));

    const ConvexPolygon e = unit_width_equilateral();
    const Indisk d = chebyshev_indisk(e);
    const double eps = 0.1;
    const ConvexPolygon er = erode(e, eps);
    const double factor = 1 - eps / d.radius;
    std::vector<Point2> expect;
    for (const Point2& v : e) expect.push_back(d.center + factor * (v - d.center));
    CHECK(hausdorff(er, make_polygon(expect)) < 1e-12);

    CHECK_THROWS_AS(erode(e, d.radius), EmptyErosion);
    CHECK_THROWS_AS(erode(e, 1.0), EmptyErosion);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ConvexPolygon k = random_convex(20, seed);
        const double r = chebyshev_indisk(k).radius;
        for (double f : {0.01, 0.3, 0.9}) {
            // The inner parallel set keeps distance eps from the boundary, so
            // its eps-neighborhood stays inside K and d_H is at least eps.
            const ConvexPolygon er = erode(k, f * r);
            CHECK(hausdorff(er, k) >= f * r - 1e-12);
            for (const Point2& v : er) CHECK(oracle::contains(k, v, -(f * r - 1e-12)));
        }
        CHECK(hausdorff(erode(k, 1e-9), k) < 1e-6);
    }
}

TEST_CASE("neighborhood containment") {
    const ConvexPolygon big = make_polygon({{-0.5, -0.5}, {1.5, -0.5}, {1.5, 1.5}, {-0.5, 1.5}});
    CHECK(neighborhood_contains(unit_square(), big, 0.0));
    CHECK_FALSE(neighborhood_contains(big, unit_square(), 0.4));
    CHECK(neighborhood_contains(big, unit_square(), std::sqrt(2.0) / 2 + 1e-12));

    // (E)_eps lies in the (1 + eps/r) dilation of E about its incenter.
    const ConvexPolygon e = unit_width_equilateral();
    const Indisk d = chebyshev_indisk(e);
    const double eps = 0.2;
    std::vector<Point2> dil;
    for (const Point2& v : e) dil.push_back(d.center + (1 + eps / d.radius) * (v - d.center));
    const ConvexPolygon dilated = make_polygon(dil);
    for (int i = 0; i < 720; ++i) {
        const double a = 2 * std::numbers::pi * i / 720;
        for (const Point2& v : e) {
            const Point2 p = v + eps * Point2{std::cos(a), std::sin(a)};
            CHECK(oracle::contains(dilated, p, 1e-12));
        }
    }
}

TEST_CASE("intersection and symmetric difference") {
    CHECK(area(*intersection(unit_square(), unit_square())) == Approx(1.0));
    CHECK_FALSE(intersection(unit_square(), translated(unit_square(), {3, 0})).has_value());
    const auto half = intersection(unit_square(), translated(unit_square(), {0.5, 0}));
    REQUIRE(half.has_value());
    CHECK(area(*half) == Approx(0.5));

    CHECK(symmetric_difference_area(unit_square(), unit_square()) == Approx(0.0));
    const ConvexPolygon inner = make_polygon({{0.2, 0.2}, {0.7, 0.2}, {0.5, 0.6}});
    CHECK(symmetric_difference_area(unit_square(), inner) == Approx(1.0 - area(inner)));
    const double eps = 0.03;
    CHECK(symmetric_difference_area(isosceles_family(eps), unit_width_equilateral()) == Approx(eps).epsilon(1e-12));
}

TEST_CASE("symmetric difference agrees with Monte Carlo sampling") {
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 3; ++trial) {
        const ConvexPolygon a = random_convex(15, 100 + trial);
        const ConvexPolygon b = translated(random_convex(12, 200 + trial), {0.4, -0.2});
        const double exact = symmetric_difference_area(a, b);
        // Sample the bounding box of both bodies.
        double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
        for (const auto* k : {&a, &b}) {
            for (const Point2& v : *k) {
                x0 = std::min(x0, v.x);
                x1 = std::max(x1, v.x);
                y0 = std::min(y0, v.y);
                y1 = std::max(y1, v.y);
            }
        }
        std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
        const int samples = 1000000;
        int hits = 0;
        for (int i = 0; i < samples; ++i) {
            const Point2 p{ux(gen), uy(gen)};
            hits += oracle::contains(a, p) != oracle::contains(b, p);
        }
        const double box = (x1 - x0) * (y1 - y0);
        const double frac = static_cast<double>(hits) / samples;
        const double sigma = box * std::sqrt(frac * (1 - frac) / samples);
        CHECK(std::abs(frac * box - exact) <= 3 * sigma);
    }
}

TEST_CASE("scale and rigid motion invariance") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> lam(0.1, 10.0), ang(0.0, 2 * std::numbers::pi), off(-5.0, 5.0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ConvexPolygon k = random_convex(8 + seed % 40, seed);
        const ConvexPolygon j = random_convex(10, seed + 1000);
        const double l = lam(gen);
        const ConvexPolygon lk = scaled(k, l);
        CHECK(area(lk) == Approx(l * l * area(k)).epsilon(1e-10));
        CHECK(minimal_width(lk).value == Approx(l * minimal_width(k).value).epsilon(1e-10));
        CHECK(chebyshev_indisk(lk).radius == Approx(l * chebyshev_indisk(k).radius).epsilon(1e-10));
        CHECK(hausdorff(lk, scaled(j, l)) == Approx(l * hausdorff(k, j)).epsilon(1e-10));

        const ConvexPolygon m = translated(rotated(k, ang(gen)), {off(gen), off(gen)});
        CHECK(area(m) == Approx(area(k)).epsilon(1e-9));
        CHECK(perimeter(m) == Approx(perimeter(k)).epsilon(1e-9));
        CHECK(minimal_width(m).value == Approx(minimal_width(k).value).epsilon(1e-9));
        CHECK(chebyshev_indisk(m).radius == Approx(chebyshev_indisk(k).radius).epsilon(1e-9));
        CHECK(diameter(m) == Approx(diameter(k)).epsilon(1e-9));
    }
}

TEST_CASE("inradius to width ratio lies in [1/3, 1/2]") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const ConvexPolygon k = random_convex(3 + seed % 60, seed);
        const double x = chebyshev_indisk(k).radius / minimal_width(k).value;
        CHECK(x >= 1.0 / 3.0 - 1e-12);
        CHECK(x <= 0.5 + 1e-12);
    }
}

TEST_CASE("polygon json round trip and parse errors") {
    const ConvexPolygon k = random_convex(12, 77);
    CHECK(polygon_from_json(polygon_to_json(k)) == k);
    CHECK(polygon_from_json(R"({"vertices": [[1,1],[0,0],[1,0],[0,1]]})") == unit_square());
    try {
        polygon_from_json("{\n  \"vertices\": [[0,0], [1,0],\n  [1,]]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(polygon_from_json(R"({"points": []})"), ParseError);
    CHECK_THROWS_AS(polygon_from_json(R"({"vertices": [[0,0],[1]]})"), ParseError);
}
