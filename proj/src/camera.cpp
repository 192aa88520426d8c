#include "rt/camera.hpp"

#include <cmath>
#include <stdexcept>

namespace rt {

Onb Onb::from_up_w(const Vec3& up, const Vec3& w) {
    if (length(w) == 0.0) throw std::invalid_argument("ONB: zero-length w axis");
    const Vec3 wn = normalize(w);
    const Vec3 u_raw = cross(up, wn);
    if (length(u_raw) < 1e-12) throw std::invalid_argument("ONB: up is parallel to w");
    const Vec3 u = normalize(u_raw);
    const Vec3 v = cross(wn, u);
    return {u, v, wn, Mat3::from_columns(u, v, wn)};
}

Onb Onb::from_v(const Vec3& v) {
    if (length(v) == 0.0) throw std::invalid_argument("ONB: zero-length v axis");
    const Vec3 vn = normalize(v);

    const double ax = std::abs(vn.x), ay = std::abs(vn.y), az = std::abs(vn.z);
    Vec3 helper{1.0, 0.0, 0.0};
    if (ay <= ax && ay <= az) {
        helper = {0.0, 1.0, 0.0};
    } else if (az <= ax && az <= ay) {
        helper = {0.0, 0.0, 1.0};
    }

    const Vec3 u = normalize(cross(vn, helper));
    const Vec3 w = cross(u, vn);  // u x v = w keeps the frame right-handed
    return {u, vn, w, Mat3::from_columns(u, vn, w)};
}

PinholeCamera::PinholeCamera(double min_x_, double max_x_, double min_y_, double max_y_,
                             double distance_, Vec2i resolution_, const Vec3& position_,
                             const Vec3& up_, const Vec3& look_at_)
    : min_x(min_x_), max_x(max_x_), min_y(min_y_), max_y(max_y_),
      distance(distance_), resolution(resolution_), position(position_),
      up(up_), look_at(look_at_) {
    if (!(min_x < max_x)) throw std::invalid_argument("camera: window needs min_x < max_x");
    if (!(min_y < max_y)) throw std::invalid_argument("camera: window needs min_y < max_y");
    if (!(distance > 0.0)) throw std::invalid_argument("camera: distance must be positive");
    if (resolution.x < 1 || resolution.y < 1)
        throw std::invalid_argument("camera: resolution must be at least 1x1");
    if (position == look_at)
        throw std::invalid_argument("camera: position and look-at point coincide");
    direction = normalize(look_at - position);
    onb = Onb::from_up_w(up, -direction);  // rejects up parallel to the view axis
}

Ray PinholeCamera::world_space_ray(Vec2i pixel) const {
    if (pixel.x < 1 || pixel.x > resolution.x || pixel.y < 1 || pixel.y > resolution.y)
        throw std::out_of_range("camera: pixel outside the 1-based image grid");

    // Pixel centres; j = height lands just below max_y, the top image row.
    const double su = min_x + (max_x - min_x) * (pixel.x - 0.5) / resolution.x;
    const double sv = min_y + (max_y - min_y) * (pixel.y - 0.5) / resolution.y;

    return {position, normalize(onb.m * Vec3{su, sv, -distance})};
}

}  // namespace rt
