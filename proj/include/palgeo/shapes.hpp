#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "palgeo/convex_polygon.hpp"

namespace palgeo {

/// Convex hull of n points drawn uniformly from a disk of radius `scale`.
/// The generator is counter based, so the output depends only on the
/// arguments. Degenerate draws are resampled.
ConvexPolygon random_convex(std::size_t n, std::uint64_t seed, double scale = 1.0);

/// Regular n-gon with the given inradius, centered at the origin, with one
/// edge midpoint on the positive x-axis.
ConvexPolygon regular_ngon(std::size_t n, double inradius);

/// Isosceles triangle with vertices (0,1) and (+-(1/sqrt(3) + eps), 0).
/// Requires 0 < eps <= 0.2.
ConvexPolygon isosceles_family(double eps);

ConvexPolygon rectangle(double w, double h);
ConvexPolygon triangle_from_sides(double a, double b, double c);

/// Triangle whose angles come from three random points on a circle.
ConvexPolygon random_triangle(std::uint64_t seed);

ConvexPolygon from_file(const std::filesystem::path& path);

enum class ShapeKind { RandomConvex, RegularNgon, Rectangle, Triangle, IsoscelesFamily, Equilateral, FromFile };

struct ShapeSpec {
    ShapeKind kind = ShapeKind::FromFile;
    std::vector<double> parameters;
    std::uint64_t seed = 0;
    std::filesystem::path path;
};

/// Parses a shape description. Recognized forms:
///   random:N[:SEED[:SCALE]]  ngon:N[:INRADIUS]  rect:W:H  tri:A:B:C
///   iso:EPS  equilateral[:WIDTH]
/// Anything else is taken as a polygon JSON file path.
ShapeSpec parse_shape_spec(std::string_view text);
ConvexPolygon make_shape(const ShapeSpec& spec);

struct NamedShape {
    std::string id;
    ConvexPolygon polygon;
};

enum class Corpus { Random, Ngon, Rectangles, Triangles, Family, Named, All };

Corpus parse_corpus(std::string_view name);
std::string_view corpus_name(Corpus c);

/// Default body count of a corpus when the caller does not pick one.
std::size_t default_corpus_size(Corpus c);

/// Deterministic corpus of n bodies:
///   Random      hulls of 8..64 uniform points
///   Ngon        regular n-gons starting at n = 3
///   Rectangles  aspect ratios log-spaced over [1, 100]
///   Triangles   random-angle triangles
///   Family      K_eps with eps log-spaced over [1e-4, 0.2]
///   Named       the four named families above at default sizes (n ignored)
///   All         n random bodies followed by Named
std::vector<NamedShape> make_corpus(Corpus c, std::size_t n, std::uint64_t seed);

}  // namespace palgeo
