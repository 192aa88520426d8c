#pragma once

#include <span>

#include "rt/vec.hpp"

namespace rt {

struct Ray {
    Vec3 origin;
    Vec3 direction;  // unit length by contract
};

struct Triangle {
    Vec3 a, b, c;  // world-space vertices
    Vec3 color;    // flat RGB, channels in [0, 1]
};

struct IntersectionRecord {
    double t{0.0};  // distance along the ray, world units
    Vec3 position;
    Vec3 normal;  // unit geometric normal, from vertex winding
    Vec3 color;
};

// On a miss the record is whatever the caller seeded the fold with.
struct HitResult {
    bool hit{false};
    IntersectionRecord record;
};

// Farther than any plausible hit; seeds the nearest-hit fold.
inline constexpr double kNoHitDistance = 999999999999.9;

// Determinant magnitude below which a ray counts as parallel to the triangle.
inline constexpr double kDetEpsilon = 1e-9;

IntersectionRecord sentinel_record();

// Moller-Trumbore test against one triangle. Hits are reported from both
// sides and the closed boundary (u = 0, v = 0, u + v = 1) counts as inside;
// only t > 0 is accepted. Degenerate triangles miss, they never throw.
HitResult intersect(const Ray& ray, const Triangle& triangle);

// Nearest hit with 0 < t < init.t over the list; the earliest triangle wins
// exact ties. Returns (false, init) when nothing qualifies.
HitResult intersect_ray_triangles(const Ray& ray, std::span<const Triangle> triangles,
                                  const IntersectionRecord& init);

}  // namespace rt
