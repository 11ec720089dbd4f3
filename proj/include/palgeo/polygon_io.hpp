#pragma once

#include <filesystem>
#include <string>

#include "palgeo/convex_polygon.hpp"

namespace palgeo {

// File format: {"vertices": [[x, y], ...]} in any order; canonicalized on load.

ConvexPolygon polygon_from_json(const std::string& text);
std::string polygon_to_json(const ConvexPolygon& k);

ConvexPolygon read_polygon(const std::filesystem::path& path);
void write_polygon(const std::filesystem::path& path, const ConvexPolygon& k);

}  // namespace palgeo
