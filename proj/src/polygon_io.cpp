#include "palgeo/polygon_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "palgeo/errors.hpp"

namespace palgeo {

namespace {

// 1-based line/column of a byte offset.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void schema_error(const std::string& text, const std::string& what) {
    const std::size_t at = text.find("\"vertices\"");
    const auto [line, column] = locate(text, at == std::string::npos ? 0 : at);
    throw ParseError(what, line, column);
}

}  // namespace

ConvexPolygon polygon_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports the 1-based byte index of the offending character.
        const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed polygon JSON", line, column);
    }
    if (!doc.is_object() || !doc.contains("vertices")) schema_error(text, "polygon JSON needs a \"vertices\" array");
    const auto& list = doc["vertices"];
    if (!list.is_array()) schema_error(text, "\"vertices\" must be an array");

    std::vector<Point2> pts;
    pts.reserve(list.size());
    for (const auto& v : list) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            schema_error(text, "each vertex must be a [x, y] pair of numbers");
        }
        pts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return make_polygon(pts);
}

std::string polygon_to_json(const ConvexPolygon& k) {
    nlohmann::json list = nlohmann::json::array();
    for (const Point2& p : k) list.push_back({p.x, p.y});
    return nlohmann::json{{"vertices", list}}.dump(2) + "\n";
}

ConvexPolygon read_polygon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polygon file " + path.string(), 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return polygon_from_json(buf.str());
}

void write_polygon(const std::filesystem::path& path, const ConvexPolygon& k) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write polygon file " + path.string());
    out << polygon_to_json(k);
}

}  // namespace palgeo
