#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "svcvv/vec3.hpp"

namespace svcvv {

/// Unit quaternion, scalar-first Hamilton convention, right-handed frames.
/// q maps body coordinates into world coordinates: x_w = q * x_b * conj(q).
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion conjugate(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm(const Quaternion& q) {
    return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

inline Quaternion normalized(const Quaternion& q) {
    const double n = norm(q);
    if (n == 0.0) throw std::domain_error("quaternion normalize: zero norm");
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

/// Rotate a body-frame vector into the world frame.
inline Vec3 rotate(const Quaternion& q, const Vec3& v) {
    // q * (0,v) * conj(q), expanded via the double-cross identity.
    const Vec3 u{q.x, q.y, q.z};
    const Vec3 t = 2.0 * cross(u, v);
    return v + q.w * t + cross(u, t);
}

inline Quaternion from_axis_angle(const Vec3& axis, double angle_rad) {
    const double n = norm(axis);
    if (n == 0.0) throw std::domain_error("from_axis_angle: degenerate direction");
    const double h = 0.5 * angle_rad;
    const double s = std::sin(h) / n;
    return {std::cos(h), s * axis.x, s * axis.y, s * axis.z};
}

/// exp((0, v/2)): the unit quaternion advancing an attitude by the rotation
/// vector v (axis * angle, radians).
inline Quaternion quat_exp_half(const Vec3& v) {
    const double angle = norm(v);
    if (angle < 1e-300) return {1.0, 0.5 * v.x, 0.5 * v.y, 0.5 * v.z};
    const double h = 0.5 * angle;
    const double s = std::sin(h) / angle;
    return {std::cos(h), s * v.x, s * v.y, s * v.z};
}

/// Shortest-arc rotation taking direction `from` onto direction `to`.
inline Quaternion shortest_arc(const Vec3& from, const Vec3& to) {
    const double nf = norm(from), nt = norm(to);
    if (nf == 0.0 || nt == 0.0) throw std::domain_error("shortest_arc: degenerate direction");
    const Vec3 f = from / nf, t = to / nt;
    const double c = dot(f, t);
    if (c < -1.0 + 1e-12) {
        // Antiparallel: pick any axis orthogonal to f.
        Vec3 axis = cross(f, Vec3{1.0, 0.0, 0.0});
        if (norm(axis) < 1e-6) axis = cross(f, Vec3{0.0, 1.0, 0.0});
        return from_axis_angle(axis, std::numbers::pi);
    }
    const Vec3 axis = cross(f, t);
    const Quaternion q{1.0 + c, axis.x, axis.y, axis.z};
    return normalized(q);
}

/// Body-frame angular velocity between two consecutive attitude samples,
/// dq/dt taken as the forward difference (q1 - q0) / dt.
/// Both inputs must be unit quaternions.
inline Vec3 quat_derivative_body_rate(const Quaternion& q0, Quaternion q1, double dt) {
    if (std::abs(norm(q0) - 1.0) > 1e-6 || std::abs(norm(q1) - 1.0) > 1e-6)
        throw std::domain_error("quat_derivative_body_rate: non-unit quaternion");
    if (dt <= 0.0) throw std::domain_error("quat_derivative_body_rate: dt must be positive");
    // Double cover: keep q1 on the same sheet as q0 so the difference stays small.
    const double align = q0.w * q1.w + q0.x * q1.x + q0.y * q1.y + q0.z * q1.z;
    if (align < 0.0) q1 = {-q1.w, -q1.x, -q1.y, -q1.z};
    const Quaternion dq{(q1.w - q0.w) / dt, (q1.x - q0.x) / dt,
                        (q1.y - q0.y) / dt, (q1.z - q0.z) / dt};
    const Quaternion r = conjugate(q0) * dq;
    return {2.0 * r.x, 2.0 * r.y, 2.0 * r.z};
}

}  // namespace svcvv
