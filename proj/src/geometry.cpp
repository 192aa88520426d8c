#include "rt/geometry.hpp"

#include <cmath>

namespace rt {

IntersectionRecord sentinel_record() {
    return {kNoHitDistance, Vec3::zero(), Vec3::zero(), Vec3::zero()};
}

HitResult intersect(const Ray& ray, const Triangle& triangle) {
    const Vec3 edge1 = triangle.b - triangle.a;
    const Vec3 edge2 = triangle.c - triangle.a;

    const Vec3 pvec = cross(ray.direction, edge2);
    const double det = dot(edge1, pvec);
    if (std::abs(det) <= kDetEpsilon) return {false, sentinel_record()};

    const double inv_det = 1.0 / det;
    const Vec3 tvec = ray.origin - triangle.a;
    const double u = dot(tvec, pvec) * inv_det;
    if (u < 0.0 || u > 1.0) return {false, sentinel_record()};

    const Vec3 qvec = cross(tvec, edge1);
    const double v = dot(ray.direction, qvec) * inv_det;
    if (v < 0.0 || u + v > 1.0) return {false, sentinel_record()};

    const double t = dot(edge2, qvec) * inv_det;
    if (!(t > 0.0)) return {false, sentinel_record()};

    IntersectionRecord rec;
    rec.t = t;
    rec.position = ray.origin + ray.direction * t;
    // |det| > 0 guarantees a nonzero edge cross product, so this cannot throw.
    rec.normal = normalize(cross(edge1, edge2));
    rec.color = triangle.color;
    return {true, rec};
}

HitResult intersect_ray_triangles(const Ray& ray, std::span<const Triangle> triangles,
                                  const IntersectionRecord& init) {
    HitResult best{false, init};
    for (const Triangle& triangle : triangles) {
        const HitResult candidate = intersect(ray, triangle);
        if (candidate.hit && candidate.record.t < best.record.t) {
            best = {true, candidate.record};
        }
    }
    return best;
}

}  // namespace rt
