#include "palgeo/shapes.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "palgeo/errors.hpp"
#include "palgeo/polygon_io.hpp"
#include "rng.hpp"

namespace palgeo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string padded(std::string_view prefix, std::size_t i, int digits) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%0*zu", digits, i);
    return std::string(prefix) + "-" + buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw DomainError("invalid number in shape spec: '" + std::string(s) + "'");
    }
    return v;
}

std::size_t as_count(double v, const char* what) {
    if (v < 3.0 || v != std::floor(v)) throw DomainError(std::string(what) + " must be an integer >= 3");
    return static_cast<std::size_t>(v);
}

}  // namespace

ConvexPolygon random_convex(std::size_t n, std::uint64_t seed, double scale) {
    if (n < 3) throw DomainError("random_convex needs n >= 3");
    if (!(scale > 0.0)) throw DomainError("scale must be positive");
    detail::CounterRng rng(seed, n);
    std::vector<Point2> pts(n);
    while (true) {
        for (Point2& p : pts) {
            const double rad = scale * std::sqrt(rng.uniform());
            const double ang = kTwoPi * rng.uniform();
            p = {rad * std::cos(ang), rad * std::sin(ang)};
        }
        try {
            return make_polygon(pts);
        } catch (const DegenerateInput&) {
            // draw again from the continuing counter
        }
    }
}

ConvexPolygon regular_ngon(std::size_t n, double inradius) {
    if (n < 3) throw DomainError("regular_ngon needs n >= 3");
    if (!(inradius > 0.0)) throw DomainError("inradius must be positive");
    const double circumradius = inradius / std::cos(std::numbers::pi / static_cast<double>(n));
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ang = (2.0 * static_cast<double>(i) + 1.0) * std::numbers::pi / static_cast<double>(n);
        pts[i] = {circumradius * std::cos(ang), circumradius * std::sin(ang)};
    }
    return make_polygon(pts);
}

ConvexPolygon isosceles_family(double eps) {
    if (!(eps > 0.0) || eps > 0.2) throw DomainError("isosceles_family needs 0 < eps <= 0.2");
    const double half = 1.0 / std::numbers::sqrt3 + eps;
    return make_polygon({{0.0, 1.0}, {-half, 0.0}, {half, 0.0}});
}

ConvexPolygon rectangle(double w, double h) {
    if (!(w > 0.0) || !(h > 0.0) || !std::isfinite(w) || !std::isfinite(h)) {
        throw DomainError("rectangle sides must be positive");
    }
    return make_polygon({{0.0, 0.0}, {w, 0.0}, {w, h}, {0.0, h}});
}

ConvexPolygon triangle_from_sides(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0)) throw DomainError("triangle sides must be positive");
    if (!(a < b + c) || !(b < a + c) || !(c < a + b)) throw DomainError("sides violate the strict triangle inequality");
    const double x = (b * b + c * c - a * a) / (2.0 * c);
    const double y = std::sqrt(std::max(0.0, b * b - x * x));
    return make_polygon({{0.0, 0.0}, {c, 0.0}, {x, y}});
}

ConvexPolygon random_triangle(std::uint64_t seed) {
    detail::CounterRng rng(seed, 3);
    while (true) {
        std::array<Point2, 3> pts;
        std::array<double, 3> ang{};
        for (std::size_t i = 0; i < 3; ++i) {
            ang[i] = kTwoPi * rng.uniform();
            pts[i] = {std::cos(ang[i]), std::sin(ang[i])};
        }
        // Inscribed angles are half the opposite arcs; reject slivers.
        std::sort(ang.begin(), ang.end());
        const double min_arc = std::min({ang[1] - ang[0], ang[2] - ang[1], kTwoPi - ang[2] + ang[0]});
        if (min_arc < 0.02) continue;
        return make_polygon(pts);
    }
}

ConvexPolygon from_file(const std::filesystem::path& path) { return read_polygon(path); }

ShapeSpec parse_shape_spec(std::string_view text) {
    const auto parts = split(text, ':');
    const std::string_view head = parts.front();
    std::vector<double> nums;
    const bool known = head == "random" || head == "ngon" || head == "rect" || head == "tri" || head == "iso" ||
                       head == "equilateral";
    if (!known) {
        ShapeSpec spec;
        spec.kind = ShapeKind::FromFile;
        spec.path = std::filesystem::path(std::string(text));
        return spec;
    }
    for (std::size_t i = 1; i < parts.size(); ++i) nums.push_back(parse_number(parts[i]));

    auto need = [&](std::size_t lo, std::size_t hi) {
        if (nums.size() < lo || nums.size() > hi) {
            throw DomainError("wrong number of parameters for shape '" + std::string(head) + "'");
        }
    };
    ShapeSpec spec;
    if (head == "random") {
        need(1, 3);
        spec.kind = ShapeKind::RandomConvex;
        as_count(nums[0], "random point count");
        if (nums.size() >= 2) {
            if (nums[1] < 0.0 || nums[1] != std::floor(nums[1])) throw DomainError("seed must be a nonnegative integer");
            spec.seed = static_cast<std::uint64_t>(nums[1]);
        }
        spec.parameters = {nums[0], nums.size() == 3 ? nums[2] : 1.0};
    } else if (head == "ngon") {
        need(1, 2);
        spec.kind = ShapeKind::RegularNgon;
        as_count(nums[0], "ngon vertex count");
        spec.parameters = {nums[0], nums.size() == 2 ? nums[1] : 0.5};
    } else if (head == "rect") {
        need(2, 2);
        spec.kind = ShapeKind::Rectangle;
        spec.parameters = nums;
    } else if (head == "tri") {
        need(3, 3);
        spec.kind = ShapeKind::Triangle;
        spec.parameters = nums;
    } else if (head == "iso") {
        need(1, 1);
        spec.kind = ShapeKind::IsoscelesFamily;
        spec.parameters = nums;
    } else {
        need(0, 1);
        spec.kind = ShapeKind::Equilateral;
        spec.parameters = {nums.empty() ? 1.0 : nums[0]};
    }
    return spec;
}

ConvexPolygon make_shape(const ShapeSpec& spec) {
    const auto& p = spec.parameters;
    switch (spec.kind) {
        case ShapeKind::RandomConvex:
            return random_convex(static_cast<std::size_t>(p.at(0)), spec.seed, p.at(1));
        case ShapeKind::RegularNgon:
            return regular_ngon(static_cast<std::size_t>(p.at(0)), p.at(1));
        case ShapeKind::Rectangle:
            return rectangle(p.at(0), p.at(1));
        case ShapeKind::Triangle:
            return triangle_from_sides(p.at(0), p.at(1), p.at(2));
        case ShapeKind::IsoscelesFamily:
            return isosceles_family(p.at(0));
        case ShapeKind::Equilateral:
            return regular_ngon(3, p.at(0) / 3.0);
        case ShapeKind::FromFile:
            return from_file(spec.path);
    }
    throw DomainError("unknown shape kind");
}

Corpus parse_corpus(std::string_view name) {
    if (name == "random") return Corpus::Random;
    if (name == "ngon") return Corpus::Ngon;
    if (name == "rectangles") return Corpus::Rectangles;
    if (name == "triangles") return Corpus::Triangles;
    if (name == "family") return Corpus::Family;
    if (name == "named") return Corpus::Named;
    if (name == "all") return Corpus::All;
    throw DomainError("unknown corpus '" + std::string(name) + "'");
}

std::string_view corpus_name(Corpus c) {
    switch (c) {
        case Corpus::Random: return "random";
        case Corpus::Ngon: return "ngon";
        case Corpus::Rectangles: return "rectangles";
        case Corpus::Triangles: return "triangles";
        case Corpus::Family: return "family";
        case Corpus::Named: return "named";
        case Corpus::All: return "all";
    }
    return "unknown";
}

std::size_t default_corpus_size(Corpus c) {
    switch (c) {
        case Corpus::Random: return 1000;
        case Corpus::Ngon: return 62;
        case Corpus::Rectangles: return 25;
        case Corpus::Triangles: return 100;
        case Corpus::Family: return 25;
        case Corpus::Named: return 0;
        case Corpus::All: return 1000;
    }
    return 0;
}

std::vector<NamedShape> make_corpus(Corpus c, std::size_t n, std::uint64_t seed) {
    std::vector<NamedShape> out;
    switch (c) {
        case Corpus::Random:
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t body_seed = detail::splitmix64(seed ^ detail::splitmix64(i + 1));
                const std::size_t points = 8 + static_cast<std::size_t>(detail::splitmix64(body_seed) % 57);
                out.push_back({padded("random", i, 4), random_convex(points, body_seed)});
            }
            break;
        case Corpus::Ngon:
            for (std::size_t i = 0; i < n; ++i) out.push_back({padded("ngon", i + 3, 3), regular_ngon(i + 3, 0.5)});
            break;
        case Corpus::Rectangles:
            for (std::size_t i = 0; i < n; ++i) {
                const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
                out.push_back({padded("rect", i, 3), rectangle(1.0, std::pow(100.0, t))});
            }
            break;
        case Corpus::Triangles:
            for (std::size_t i = 0; i < n; ++i) {
                out.push_back({padded("triangle", i, 3), random_triangle(detail::splitmix64(seed + 0x7431 + i))});
            }
            break;
        case Corpus::Family:
            for (std::size_t i = 0; i < n; ++i) {
                const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
                out.push_back({padded("keps", i, 3), isosceles_family(0.2 * std::pow(1e-4 / 0.2, t))});
            }
            break;
        case Corpus::Named:
            for (Corpus part : {Corpus::Ngon, Corpus::Rectangles, Corpus::Triangles, Corpus::Family}) {
                auto bodies = make_corpus(part, default_corpus_size(part), seed);
                std::move(bodies.begin(), bodies.end(), std::back_inserter(out));
            }
            break;
        case Corpus::All: {
            out = make_corpus(Corpus::Random, n, seed);
            auto named = make_corpus(Corpus::Named, 0, seed);
            std::move(named.begin(), named.end(), std::back_inserter(out));
            break;
        }
    }
    return out;
}

}  // namespace palgeo
