#pragma once

#include <Eigen/Dense>

namespace nflux {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Chart point (x1, x2, x3); for E^3(kappa, tau) the base coordinate is
// w = x1 + i x2.
using Point = Eigen::Vector3d;

enum class Basis { Coordinate, Frame };

// Tangent vector at a base point, with components either in the chart
// coordinate basis (d/dx1, d/dx2, d/dx3) or in the orthonormal frame
// (E1, E2, E3) of the ambient space.
struct TangentVector {
  Point base = Point::Zero();
  Vec3 comps = Vec3::Zero();
  Basis basis = Basis::Coordinate;
};

inline TangentVector coordinate_vector(const Point& base, const Vec3& comps) {
  return TangentVector{base, comps, Basis::Coordinate};
}

inline TangentVector frame_vector(const Point& base, const Vec3& comps) {
  return TangentVector{base, comps, Basis::Frame};
}

}  // namespace nflux
