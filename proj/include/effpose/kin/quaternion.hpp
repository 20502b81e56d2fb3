#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace effpose::kin {

/// Unit quaternion in xyzw storage (scalar part last). With this layout the
/// identity rotation is (0,0,0,1), which is also the mode of a canonicalized
/// Bingham distribution with D = I.
struct Quaternion {
  double x = 0.0, y = 0.0, z = 0.0, w = 1.0;

  Quaternion() = default;
  Quaternion(double x_, double y_, double z_, double w_) : x(x_), y(y_), z(z_), w(w_) {}

  static Quaternion identity() { return {}; }
  static Quaternion from_axis_angle(const Eigen::Vector3d& axis, double angle);
  static Quaternion from_rotation_matrix(const Eigen::Matrix3d& r);

  double norm() const { return std::sqrt(x * x + y * y + z * z + w * w); }
  bool is_unit(double tol = 1e-6) const { return std::abs(norm() - 1.0) <= tol; }
  Quaternion normalized() const;

  Quaternion conjugate() const { return {-x, -y, -z, w}; }
  /// Inverse of a unit quaternion (the conjugate). Throws std::domain_error
  /// if the input is not unit.
  Quaternion inverse() const;

  /// Representative with w >= 0 (q and -q are the same rotation).
  Quaternion canonical() const;

  double dot(const Quaternion& o) const { return x * o.x + y * o.y + z * o.z + w * o.w; }

  Eigen::Vector4d vec4() const { return {x, y, z, w}; }

  /// Rotates a vector: q v q^-1.
  Eigen::Vector3d rotate(const Eigen::Vector3d& v) const;
};

/// Hamilton product a (.) b.
Quaternion operator*(const Quaternion& a, const Quaternion& b);

/// Rotation matrix of a unit quaternion. Throws std::domain_error on
/// non-unit input.
Eigen::Matrix3d quat_to_rotmat(const Quaternion& q);

/// Geodesic angle between the rotations represented by two unit quaternions,
/// in [0, pi]; insensitive to the sign of either input.
double quat_geodesic_angle(const Quaternion& a, const Quaternion& b);

}  // namespace effpose::kin
