#pragma once

#include <string>
#include <vector>

#include "nflux/geometry.hpp"

namespace nflux {

// Killing symmetries of the ambient space. Rotation exists only in
// E^3(kappa, tau); the isometry group of Sol3 is 3-dimensional.
enum class SymmetryId { Translation1, Translation2, Translation3, Rotation };

std::string symmetry_name(SymmetryId id);

bool symmetry_valid(const AmbientSpace& space, SymmetryId id);
void require_symmetry(const AmbientSpace& space, SymmetryId id);

std::vector<SymmetryId> symmetries_of(const AmbientSpace& space);

// A 1-parameter isometry family evaluated at group parameter t. The
// parameter is the flow parameter of the infinitesimal generator, so
// apply(t) . apply(s) = apply(t + s).
struct IsometryAction {
  AmbientSpace space;
  SymmetryId which;
  double t = 0.0;
};

// The paper's translation families S_1(.), S_2(.) in E^3(kappa', != 0)
// are written with a Moebius parameter; the flow parameter t maps to it
// by tan/tanh depending on certain the sign of kappa'.
double moebius_parameter(double kappa_prime, double t);

// Infinitesimal generator S_i at p (coordinate basis).
TangentVector killing_field(const AmbientSpace& space, SymmetryId which, const Point& p);

// Potential vector F_i with curl F_i = S_i (frame basis output). The
// kappa != 0 potentials use 1/sigma = 2 tau / kappa, which also covers
// tau = 0.
TangentVector potential_vector(const AmbientSpace& space, SymmetryId which,
                               const Point& p);

// Volume field Xi = x3 E3, with div Xi = 1.
TangentVector volume_field(const AmbientSpace& space, const Point& p);

Point isometry_apply(const AmbientSpace& space, SymmetryId which, double t,
                     const Point& p);

// Jacobian-vector product d S(t)|_p . v by central differences of
// isometry_apply; returns a vector at isometry_apply(..., p).
TangentVector isometry_differential(const AmbientSpace& space, SymmetryId which,
                                    double t, const Point& p, const TangentVector& v,
                                    double h = 1e-6);

// max_p | S(t)(S(s)(p)) - S(t+s)(p) | over the sample points.
double group_law_check(const AmbientSpace& space, SymmetryId which, double t, double s,
                       const std::vector<Point>& points);

// Convenience field views (coordinate components).
VectorField killing_field_of(const AmbientSpace& space, SymmetryId which);
VectorField potential_field_of(const AmbientSpace& space, SymmetryId which);
VectorField volume_field_of(const AmbientSpace& space);

}  // namespace nflux
