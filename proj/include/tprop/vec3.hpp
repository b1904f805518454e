#pragma once

#include <cmath>
#include <ostream>

namespace tprop {

// Real 3-vector. Units are contextual (m, m/s, T, V/m, rad/s).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    double& operator[](int i) { return (i == 0) ? x : (i == 1) ? y : z; }
    double operator[](int i) const { return (i == 0) ? x : (i == 1) ? y : z; }

    Vec3 operator+(const Vec3& v) const { return {x + v.x, y + v.y, z + v.z}; }
    Vec3 operator-(const Vec3& v) const { return {x - v.x, y - v.y, z - v.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    Vec3& operator+=(const Vec3& v) { x += v.x; y += v.y; z += v.z; return *this; }
    Vec3& operator-=(const Vec3& v) { x -= v.x; y -= v.y; z -= v.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// v/|v|; the zero vector maps to the zero vector.
inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return (n > 0.0) ? v / n : Vec3{};
}

// Deterministic right-handed basis (e1, e2) of the plane orthogonal to unit n.
inline void perp_basis(const Vec3& n, Vec3& e1, Vec3& e2) {
    Vec3 seed = (std::fabs(n.x) <= std::fabs(n.y) && std::fabs(n.x) <= std::fabs(n.z))
                    ? Vec3{1, 0, 0}
                    : (std::fabs(n.y) <= std::fabs(n.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    e1 = normalized(seed - dot(seed, n) * n);
    e2 = cross(n, e1);
}

// Row-major 3x3 tensor; m[i][j] = dB_i/dr_j when used as a field gradient.
struct Mat3 {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    // (u . grad) B  for a gradient tensor: returns m . u
    Vec3 apply(const Vec3& u) const {
        return {m[0][0] * u.x + m[0][1] * u.y + m[0][2] * u.z,
                m[1][0] * u.x + m[1][1] * u.y + m[1][2] * u.z,
                m[2][0] * u.x + m[2][1] * u.y + m[2][2] * u.z};
    }
};

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

}  // namespace tprop
