#pragma once

#include <cmath>
#include <stdexcept>

namespace rt {

struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};

    static constexpr Vec3 zero() { return {}; }
    static constexpr Vec3 ones() { return {1.0, 1.0, 1.0}; }

    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }

    // * and / are componentwise; colors use them. Dividing by a zero
    // component propagates the platform infinity, it does not trap.
    constexpr Vec3 operator*(const Vec3& o) const { return {x * o.x, y * o.y, z * o.z}; }
    constexpr Vec3 operator/(const Vec3& o) const { return {x / o.x, y / o.y, z / o.z}; }

    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z;
}

constexpr Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.y * v.z - u.z * v.y,
            u.z * v.x - u.x * v.z,
            u.x * v.y - u.y * v.x};
}

inline double length_squared(const Vec3& v) { return dot(v, v); }
inline double length(const Vec3& v) { return std::sqrt(length_squared(v)); }

// Rejects a zero-length input instead of minting NaNs.
inline Vec3 normalize(const Vec3& v) {
    const double len = length(v);
    if (len == 0.0) throw std::invalid_argument("normalize: zero-length vector");
    return v / len;
}

// Integer pair; serves as image resolution (width, height) and as a
// 1-based pixel coordinate.
struct Vec2i {
    int x{0}, y{0};

    constexpr Vec2i operator-() const { return {-x, -y}; }
    constexpr Vec2i operator+(const Vec2i& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2i operator-(const Vec2i& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2i operator*(const Vec2i& o) const { return {x * o.x, y * o.y}; }
    constexpr Vec2i operator/(const Vec2i& o) const { return {x / o.x, y / o.y}; }

    constexpr bool operator==(const Vec2i&) const = default;
};

struct Mat3 {
    double m[3][3]{};  // row-major

    static constexpr Mat3 identity() {
        return {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
    }
    static constexpr Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        return {{{r0.x, r0.y, r0.z}, {r1.x, r1.y, r1.z}, {r2.x, r2.y, r2.z}}};
    }
    static constexpr Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        return {{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}}};
    }

    constexpr bool operator==(const Mat3&) const = default;
};

// Cofactor expansion along the first row.
constexpr double determinant(const Mat3& a) {
    return a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1])
         - a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0])
         + a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
}

constexpr Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
            a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
            a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

}  // namespace rt
