#pragma once

#include "rt/geometry.hpp"
#include "rt/vec.hpp"

namespace rt {

// Right-handed orthonormal frame; m is the camera-to-world rotation whose
// columns are u, v, w.
struct Onb {
    Vec3 u, v, w;
    Mat3 m;

    // wn = normalize(w), u = normalize(up x wn), v = wn x u.
    static Onb from_up_w(const Vec3& up, const Vec3& w);

    // Frame whose v axis is normalize(v); the helper axis is the canonical
    // basis vector least parallel to v.
    static Onb from_v(const Vec3& v);
};

// Lensless perspective camera. Pixels are addressed 1-based: i runs left to
// right, j runs bottom (1) to top (height).
struct PinholeCamera {
    double min_x, max_x, min_y, max_y;  // image-plane window, camera units
    double distance;                    // window offset along the view axis
    Vec2i resolution;                   // width, height in pixels
    Vec3 position;
    Vec3 up;
    Vec3 look_at;
    Vec3 direction;  // unit vector toward look_at
    Onb onb;         // w = -direction, so the camera looks down -w

    PinholeCamera(double min_x, double max_x, double min_y, double max_y,
                  double distance, Vec2i resolution, const Vec3& position,
                  const Vec3& up, const Vec3& look_at);

    // Ray from the camera position through the centre of the given pixel.
    Ray world_space_ray(Vec2i pixel) const;
};

}  // namespace rt
