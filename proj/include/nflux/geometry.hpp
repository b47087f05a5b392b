#pragma once

#include <functional>

#include "nflux/space.hpp"
#include "nflux/types.hpp"

namespace nflux {

// Central finite-difference configuration shared by the metric calculus.
struct FdConfig {
  double h = 1e-5;
  bool richardson = false;
};

// Vector field given by coordinate components.
using VectorField = std::function<Vec3(const Point&)>;
// Vector field given by frame components X = X^1 E1 + X^2 E2 + X^3 E3.
using FrameField = std::function<Vec3(const Point&)>;

// Metric tensor in the coordinate basis at p.
Mat3 metric_at(const AmbientSpace& space, const Point& p);

// Orthonormal frame (E1, E2, E3) at p, as columns of the returned matrix
// (coordinate components).
Mat3 frame_at(const AmbientSpace& space, const Point& p);

// Basis conversions for tangent vectors.
TangentVector to_coordinate(const AmbientSpace& space, const TangentVector& v);
TangentVector to_frame(const AmbientSpace& space, const TangentVector& v);
TangentVector to_basis(const AmbientSpace& space, const TangentVector& v, Basis basis);

// Riemannian inner product; accepts mixed bases, requires equal base points.
double inner(const AmbientSpace& space, const TangentVector& u, const TangentVector& v);

double norm(const AmbientSpace& space, const TangentVector& u);

// Cross product induced by the metric and the orientation of (E1, E2, E3).
TangentVector cross(const AmbientSpace& space, const TangentVector& u,
                    const TangentVector& v);

// Christoffel symbols Gamma[k](i, j) = Gamma^k_{ij} from central finite
// differences of metric_at.
std::array<Mat3, 3> christoffel_at(const AmbientSpace& space, const Point& p,
                                   const FdConfig& fd = {});

// div X = (1/sqrt(det g)) d_i (sqrt(det g) X^i), central differences.
double divergence(const AmbientSpace& space, const VectorField& X, const Point& p,
                  const FdConfig& fd = {});

// Frame-formula curl for X = X^1 E1 + X^2 E2 + X^3 E3; the three cases are
// E^3 with tau != 0, E^3 with tau = 0, and Sol3. Directional derivatives
// dX^i(E_j) are central differences along the frame directions.
TangentVector curl_frame(const AmbientSpace& space, const FrameField& X,
                         const Point& p, const FdConfig& fd = {});

// Coordinate-based (*dX^flat)^sharp via finite differences; independent
// route used as an oracle for curl_frame.
TangentVector curl_numeric(const AmbientSpace& space, const VectorField& X,
                           const Point& p, const FdConfig& fd = {});

// Covariant derivative (nabla_u X)(p) in coordinate components.
TangentVector covariant_derivative(const AmbientSpace& space, const VectorField& X,
                                   const TangentVector& u, const FdConfig& fd = {});

// Gradient of a scalar function (metric-raised differential).
TangentVector gradient(const AmbientSpace& space,
                       const std::function<double(const Point&)>& psi, const Point& p,
                       const FdConfig& fd = {});

// Frame components of a coordinate vector field, as a field.
FrameField frame_components_field(const AmbientSpace& space, const VectorField& X);

}  // namespace nflux
