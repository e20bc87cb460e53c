#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "gknet/error.hpp"
#include "gknet/rng.hpp"

namespace gknet {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    const double n = norm();
    if (n == 0.0) throw InvalidInputError("cannot normalize zero vector");
    return {x / n, y / n, z / n};
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct Vec2 {
  double u = 0.0, v = 0.0;

  Vec2 operator-(const Vec2& o) const { return {u - o.u, v - o.v}; }
  double norm() const { return std::sqrt(u * u + v * v); }
};

/// Body-frame or camera-frame point, meters.
using Point3D = Vec3;
/// Continuous pixel coordinates.
using Point2D = Vec2;

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  double& operator()(int r, int c) { return m[static_cast<std::size_t>(r * 3 + c)]; }
  double operator()(int r, int c) const { return m[static_cast<std::size_t>(r * 3 + c)]; }

  Vec3 apply(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }

  Mat3 mul(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }
};

/// Unit quaternion, (w, x, y, z) ordering everywhere: in memory, on disk and
/// in every file format this library reads or writes.
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  double dot(const Quat& o) const {
    return w * o.w + x * o.x + y * o.y + z * o.z;
  }
  Quat conjugate() const { return {w, -x, -y, -z}; }
  Quat operator-() const { return {-w, -x, -y, -z}; }

  /// Hamilton product.
  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
};

inline Quat quat_normalize(const Quat& q) {
  const double n = q.norm();
  if (n < 1e-12) throw InvalidInputError("zero-norm quaternion");
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

inline Quat quat_from_axis_angle(const Vec3& axis, double angle) {
  const Vec3 a = axis.normalized();
  const double h = 0.5 * angle;
  const double s = std::sin(h);
  return {std::cos(h), a.x * s, a.y * s, a.z * s};
}

/// Uniform random rotation (Shoemake / 4D-Gaussian method).
inline Quat random_unit_quat(Rng& rng) {
  Quat q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
  while (q.norm() < 1e-6) q = {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
  return quat_normalize(q);
}

/// Rotation matrix of a quaternion. The input is renormalized internally;
/// a zero-norm quaternion is rejected.
inline Mat3 quat_to_matrix(const Quat& q_in) {
  const Quat q = quat_normalize(q_in);
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Mat3 r;
  r(0, 0) = 1 - 2 * (y * y + z * z);
  r(0, 1) = 2 * (x * y - w * z);
  r(0, 2) = 2 * (x * z + w * y);
  r(1, 0) = 2 * (x * y + w * z);
  r(1, 1) = 1 - 2 * (x * x + z * z);
  r(1, 2) = 2 * (y * z - w * x);
  r(2, 0) = 2 * (x * z - w * y);
  r(2, 1) = 2 * (y * z + w * x);
  r(2, 2) = 1 - 2 * (x * x + y * y);
  return r;
}

/// Inverse of quat_to_matrix (Shepperd's method, numerically safe branch).
inline Quat matrix_to_quat(const Mat3& r) {
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  Quat q;
  if (tr > 0.0) {
    double s = std::sqrt(tr + 1.0) * 2.0;
    q.w = 0.25 * s;
    q.x = (r(2, 1) - r(1, 2)) / s;
    q.y = (r(0, 2) - r(2, 0)) / s;
    q.z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
    q.w = (r(2, 1) - r(1, 2)) / s;
    q.x = 0.25 * s;
    q.y = (r(0, 1) + r(1, 0)) / s;
    q.z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
    q.w = (r(0, 2) - r(2, 0)) / s;
    q.x = (r(0, 1) + r(1, 0)) / s;
    q.y = 0.25 * s;
    q.z = (r(1, 2) + r(2, 1)) / s;
  } else {
    double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
    q.w = (r(1, 0) - r(0, 1)) / s;
    q.x = (r(0, 2) + r(2, 0)) / s;
    q.y = (r(1, 2) + r(2, 1)) / s;
    q.z = 0.25 * s;
  }
  return quat_normalize(q);
}

/// Geodesic angle between two unit quaternions: 2*acos(|<a, b>|).
/// Sign-flip invariant; the dot product is clamped because floating-point
/// values can exceed 1 by a few ulps.
inline double quat_angle(const Quat& a, const Quat& b) {
  const double d = std::min(1.0, std::max(-1.0, a.dot(b)));
  return 2.0 * std::acos(std::abs(d));
}

/// Pinhole camera, no distortion.
struct CameraIntrinsics {
  double fx = 0.0, fy = 0.0;
  double cx = 0.0, cy = 0.0;
  int width = 0, height = 0;

  void validate() const {
    if (!(fx > 0.0) || !(fy > 0.0))
      throw InvalidInputError("intrinsics: focal lengths must be positive");
    if (!(cx > 0.0 && cx < width) || !(cy > 0.0 && cy < height))
      throw InvalidInputError("intrinsics: principal point outside image");
  }
};

/// Rigid transform from target body frame to camera frame.
struct Pose {
  Quat q;
  Vec3 t;

  Point3D to_camera(const Point3D& p_body) const {
    return quat_to_matrix(q).apply(p_body) + t;
  }
};

/// Minimum camera-frame depth accepted by project(), meters.
inline constexpr double kMinProjectionDepth = 1e-6;

/// Projects a body-frame point to continuous pixel coordinates. The
/// homogeneous division is applied after the rigid transform; points at or
/// behind the camera plane raise BehindCameraError.
inline Point2D project(const CameraIntrinsics& K, const Pose& pose,
                       const Point3D& p_body) {
  const Point3D pc = pose.to_camera(p_body);
  if (!(pc.z > kMinProjectionDepth))
    throw BehindCameraError("point behind camera (z=" + std::to_string(pc.z) +
                            ")");
  return {K.fx * pc.x / pc.z + K.cx, K.fy * pc.y / pc.z + K.cy};
}

/// Faster variant for callers that already hold the rotation matrix.
inline Point2D project(const CameraIntrinsics& K, const Mat3& R,
                       const Vec3& t, const Point3D& p_body) {
  const Point3D pc = R.apply(p_body) + t;
  if (!(pc.z > kMinProjectionDepth))
    throw BehindCameraError("point behind camera (z=" + std::to_string(pc.z) +
                            ")");
  return {K.fx * pc.x / pc.z + K.cx, K.fy * pc.y / pc.z + K.cy};
}

/// Mean relative translation error over a set of samples:
/// mean_i ||t_i - gt_i|| / ||gt_i||.
inline double pose_error_translation(std::span<const Vec3> pred,
                                     std::span<const Vec3> gt) {
  if (pred.size() != gt.size() || pred.empty())
    throw InvalidInputError("pose_error_translation: need equal-length non-empty lists");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double denom = gt[i].norm();
    if (denom == 0.0)
      throw InvalidInputError("pose_error_translation: zero-norm ground-truth translation");
    sum += (pred[i] - gt[i]).norm() / denom;
  }
  return sum / static_cast<double>(pred.size());
}

/// Mean quaternion geodesic error in radians: mean_i 2*acos(|<q_i, gt_i>|).
/// Inputs must be unit quaternions within 1e-3.
inline double pose_error_rotation(std::span<const Quat> pred,
                                  std::span<const Quat> gt) {
  if (pred.size() != gt.size() || pred.empty())
    throw InvalidInputError("pose_error_rotation: need equal-length non-empty lists");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (std::abs(pred[i].norm() - 1.0) > 1e-3 ||
        std::abs(gt[i].norm() - 1.0) > 1e-3)
      throw InvalidInputError("pose_error_rotation: non-unit quaternion");
    sum += quat_angle(pred[i], gt[i]);
  }
  return sum / static_cast<double>(pred.size());
}

inline double pose_error_translation(const std::vector<Vec3>& pred,
                                     const std::vector<Vec3>& gt) {
  return pose_error_translation(std::span<const Vec3>(pred),
                                std::span<const Vec3>(gt));
}

inline double pose_error_rotation(const std::vector<Quat>& pred,
                                  const std::vector<Quat>& gt) {
  return pose_error_rotation(std::span<const Quat>(pred),
                             std::span<const Quat>(gt));
}

}  // namespace gknet
