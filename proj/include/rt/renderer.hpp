#pragma once

#include <vector>

#include "rt/camera.hpp"
#include "rt/framebuffer.hpp"
#include "rt/geometry.hpp"

namespace rt {

struct Scene {
    std::vector<Triangle> triangles;
    Vec3 background{0.0, 0.0, 0.0};  // channels in [0, 1]
};

struct RenderConfig {
    PinholeCamera camera;
    Scene scene;
    int jobs{1};
};

// Color of the nearest triangle hit by the ray through pixel (i, j), or the
// scene background when nothing is hit. Pixel coordinates are 1-based.
Vec3 shade_pixel(const PinholeCamera& camera, const Scene& scene, int i, int j);

// One ray per pixel over the whole grid: buffer row r (0-based, top) and
// column c hold shade_pixel(c + 1, height - r). Rows are distributed over
// `jobs` workers; the result is identical for every jobs value.
FrameBuffer integrate(Vec2i resolution, const PinholeCamera& camera, const Scene& scene,
                      int jobs = 1);

FrameBuffer render(const RenderConfig& config);

// One red triangle facing the default camera, black background.
Scene default_scene();

}  // namespace rt
