#pragma once

#include "g2sff/linalg.hpp"

#include <cmath>

namespace g2sff {

/// Quaternions in the basis (1, i, j, k) with ij = k.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion from_vector(const Vector4& v) { return {v[0], v[1], v[2], v[3]}; }
  Vector4 to_vector() const { return Vector4(w, x, y, z); }

  /// a = 0..3 -> 1, i, j, k
  static Quaternion unit(int a) {
    Quaternion q;
    switch (a) {
      case 0: q.w = 1.0; break;
      case 1: q.x = 1.0; break;
      case 2: q.y = 1.0; break;
      case 3: q.z = 1.0; break;
      default: throw InvalidLabelError("quaternion unit index out of range");
    }
    return q;
  }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  double squared_norm() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(squared_norm()); }

  Quaternion operator+(const Quaternion& r) const { return {w + r.w, x + r.x, y + r.y, z + r.z}; }
  Quaternion operator-(const Quaternion& r) const { return {w - r.w, x - r.x, y - r.y, z - r.z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  Quaternion operator*(const Quaternion& r) const {
    return {w * r.w - x * r.x - y * r.y - z * r.z,
            w * r.x + x * r.w + y * r.z - z * r.y,
            w * r.y - x * r.z + y * r.w + z * r.x,
            w * r.z + x * r.y - y * r.x + z * r.w};
  }
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// Matrix of v -> q * v on coordinates (1, i, j, k).
inline Matrix4 left_mult_matrix(const Quaternion& q) {
  Matrix4 m;
  for (int c = 0; c < 4; ++c) m.col(c) = (q * Quaternion::unit(c)).to_vector();
  return m;
}

/// Matrix of v -> v * q.
inline Matrix4 right_mult_matrix(const Quaternion& q) {
  Matrix4 m;
  for (int c = 0; c < 4; ++c) m.col(c) = (Quaternion::unit(c) * q).to_vector();
  return m;
}

}  // namespace g2sff
