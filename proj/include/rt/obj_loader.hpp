#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "rt/errors.hpp"
#include "rt/geometry.hpp"

namespace rt {

struct Mesh {
    std::vector<Triangle> triangles;
};

// Wavefront OBJ subset: `v x y z` vertices and `f` faces with positive
// 1-based indices (forms i, i/t, i/t/n, i//n; only the vertex index is
// used). Faces with more than three vertices are fan-triangulated around
// their first vertex. Everything else (vn, vt, o, g, s, mtllib, usemtl,
// comments, blank lines) is ignored. Every triangle gets `color`.
//
// Throws ObjParseError (with line number) on malformed content and IoError
// when the file cannot be opened.
Mesh load_obj(std::istream& in, const Vec3& color);
Mesh load_obj(const std::filesystem::path& path, const Vec3& color);

}  // namespace rt
