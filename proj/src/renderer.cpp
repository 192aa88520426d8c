#include "rt/renderer.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace rt {

Vec3 shade_pixel(const PinholeCamera& camera, const Scene& scene, int i, int j) {
    const Ray ray = camera.world_space_ray({i, j});
    const HitResult result = intersect_ray_triangles(ray, scene.triangles, sentinel_record());
    return result.hit ? result.record.color : scene.background;
}

FrameBuffer integrate(Vec2i resolution, const PinholeCamera& camera, const Scene& scene,
                      int jobs) {
    if (resolution != camera.resolution)
        throw std::invalid_argument("integrate: resolution does not match the camera");
    if (jobs < 1) throw std::invalid_argument("integrate: jobs must be at least 1");

    const int width = resolution.x;
    const int height = resolution.y;
    FrameBuffer buffer(width, height);

    // Grid row r holds pixel row j = height - r, so the top image row is
    // emitted first. Each worker owns a contiguous block of rows.
    const auto render_rows = [&](int row_begin, int row_end) {
        for (int r = row_begin; r < row_end; ++r) {
            const int j = height - r;
            for (int c = 0; c < width; ++c) {
                buffer.set_pixel(c, r, shade_pixel(camera, scene, c + 1, j));
            }
        }
    };

    const int workers = std::min(jobs, height);
    if (workers == 1) {
        render_rows(0, height);
    } else {
        const int chunk = (height + workers - 1) / workers;
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int k = 0; k < workers; ++k) {
            const int begin = k * chunk;
            const int end = std::min(begin + chunk, height);
            if (begin >= end) break;
            pool.emplace_back(render_rows, begin, end);
        }
    }
    return buffer;
}

FrameBuffer render(const RenderConfig& config) {
    return integrate(config.camera.resolution, config.camera, config.scene, config.jobs);
}

Scene default_scene() {
    Scene scene;
    scene.triangles.push_back({{-2.5, -2.5, 0.0}, {2.5, -2.5, 0.0}, {0.0, 2.5, 0.0},
                               {1.0, 0.0, 0.0}});
    scene.background = Vec3::zero();
    return scene;
}

}  // namespace rt
