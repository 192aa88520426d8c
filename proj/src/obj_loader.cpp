#include "rt/obj_loader.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace rt {
namespace {

double parse_real(std::string_view token, int line) {
    double value{};
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ObjParseError(line, "malformed number '" + std::string(token) + "'");
    return value;
}

// Accepts i, i/t, i/t/n and i//n; everything past the vertex index is ignored.
std::size_t parse_vertex_index(std::string_view token, int line, std::size_t vertex_count) {
    const std::string_view head = token.substr(0, token.find('/'));
    int index{};
    const char* end = head.data() + head.size();
    const auto [ptr, ec] = std::from_chars(head.data(), end, index);
    if (head.empty() || ec != std::errc{} || ptr != end)
        throw ObjParseError(line, "malformed face index '" + std::string(token) + "'");
    if (index < 1)
        throw ObjParseError(line, "face index " + std::to_string(index) + " is not positive");
    if (static_cast<std::size_t>(index) > vertex_count)
        throw ObjParseError(line, "face index " + std::to_string(index) + " exceeds the " +
                                      std::to_string(vertex_count) + " vertices declared so far");
    return static_cast<std::size_t>(index);
}

}  // namespace

Mesh load_obj(std::istream& in, const Vec3& color) {
    std::vector<Vec3> vertices;
    Mesh mesh;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::istringstream tokens(line);
        std::string keyword;
        if (!(tokens >> keyword) || keyword.front() == '#') continue;

        if (keyword == "v") {
            std::string xs, ys, zs;
            if (!(tokens >> xs >> ys >> zs))
                throw ObjParseError(line_no, "vertex needs three coordinates");
            vertices.push_back(
                {parse_real(xs, line_no), parse_real(ys, line_no), parse_real(zs, line_no)});
        } else if (keyword == "f") {
            std::vector<std::size_t> face;
            std::string token;
            while (tokens >> token)
                face.push_back(parse_vertex_index(token, line_no, vertices.size()));
            if (face.size() < 3)
                throw ObjParseError(line_no, "face needs at least three vertices");
            // Fan triangulation anchored at the first face vertex.
            for (std::size_t k = 1; k + 1 < face.size(); ++k) {
                mesh.triangles.push_back({vertices[face[0] - 1], vertices[face[k] - 1],
                                          vertices[face[k + 1] - 1], color});
            }
        }
        // Any other directive is ignored.
    }
    return mesh;
}

Mesh load_obj(const std::filesystem::path& path, const Vec3& color) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return load_obj(in, color);
}

}  // namespace rt
