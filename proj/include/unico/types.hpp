#pragma once

#include <Eigen/Core>

namespace unico {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// N x 3 point set in shape coordinates.
using Points = Eigen::Matrix<double, Eigen::Dynamic, 3>;

/// The 10 unique entries of a symmetric 4x4 quadric matrix, in the order
/// a11, a22, a33, a44, a12, a13, a14, a23, a24, a34.
using Coeffs = Eigen::Matrix<double, 10, 1>;

/// Axis-aligned bounding box.
struct Aabb {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Zero();

  static Aabb of(const Points& pts);

  bool contains(const Vec3& p, double tol = 1e-9) const {
    return (p.array() >= lo.array() - tol).all() &&
           (p.array() <= hi.array() + tol).all();
  }
  Vec3 center() const { return 0.5 * (lo + hi); }
  Vec3 size() const { return hi - lo; }
  double diagonal() const { return (hi - lo).norm(); }
  Aabb inflated(double m) const { return {lo.array() - m, hi.array() + m}; }
};

inline Aabb Aabb::of(const Points& pts) {
  Aabb box;
  box.lo = pts.colwise().minCoeff().transpose();
  box.hi = pts.colwise().maxCoeff().transpose();
  return box;
}

}  // namespace unico
