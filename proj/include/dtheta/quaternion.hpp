#pragma once

#include <array>
#include <cmath>

namespace dtheta {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

// w + x i + y j + z k
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  static constexpr Quat pure(const Vec3& v) { return {0, v.x, v.y, v.z}; }
  static constexpr Quat unit(int axis) {
    // axis 0 -> 1, 1 -> i, 2 -> j, 3 -> k
    return {axis == 0 ? 1.0 : 0.0, axis == 1 ? 1.0 : 0.0, axis == 2 ? 1.0 : 0.0,
            axis == 3 ? 1.0 : 0.0};
  }

  constexpr Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  constexpr Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  constexpr Quat operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  // Hamilton product
  constexpr Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
  }

  constexpr Quat conj() const { return {w, -x, -y, -z}; }
  constexpr double dot(const Quat& o) const { return w * o.w + x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  constexpr Vec3 vec() const { return {x, y, z}; }
  constexpr std::array<double, 4> array() const { return {w, x, y, z}; }
};

/// exp(t u) for a unit pure quaternion u.
inline Quat exp_pure(const Vec3& u, double t) {
  const double s = std::sin(t);
  return {std::cos(t), u.x * s, u.y * s, u.z * s};
}

/// Rotation v -> q v q̄ of R³ for unit q.
inline Vec3 rotate(const Quat& q, const Vec3& v) { return (q * Quat::pure(v) * q.conj()).vec(); }

}  // namespace dtheta
