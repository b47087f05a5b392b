#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "nflux/fields.hpp"
#include "nflux/geometry.hpp"

namespace nflux {

// Immersed parameter patch (u, v) -> M. Partials are analytic when the
// constructor supplies them, otherwise central differences of the chart.
// The unit normal is N = (f_u x f_v) / |f_u x f_v|; the (u, v) order
// declared by each family constructor fixes the orientation and therefore
// the signs of all fluxes.
struct SurfacePatch {
  AmbientSpace space = AmbientSpace::sol3();
  std::function<Point(double, double)> chart;
  // Optional analytic partials (f_u, f_v) as coordinate components.
  std::function<std::pair<Vec3, Vec3>(double, double)> partials;

  double u_min = 0.0, u_max = 1.0;
  double v_min = 0.0, v_max = 1.0;
  bool periodic_u = false, periodic_v = false;
  double period_u = 0.0, period_v = 0.0;

  double fd_first = 1e-6;   // step for finite-difference first partials
  double fd_second = 1e-4;  // step for finite-difference second partials

  std::string name = "patch";

  bool in_domain(double u, double v, double margin = 1e-3) const;
  void require_in_domain(double u, double v) const;
};

Point surface_point(const SurfacePatch& s, double u, double v);

// (f_u, f_v) at (u, v) as coordinate components.
std::pair<Vec3, Vec3> surface_partials(const SurfacePatch& s, double u, double v);

// df(w) = w1 f_u + w2 f_v as a tangent vector at chart(u, v).
TangentVector differential(const SurfacePatch& s, double u, double v, const Vec2& w);

TangentVector unit_normal(const SurfacePatch& s, double u, double v);

// *df(w) = df(w) x N: the quarter turn of df in the tangent plane.
TangentVector star_df(const SurfacePatch& s, double u, double v, const Vec2& w);

// Mean curvature H = trace(I^{-1} II) / 2 with the ambient covariant
// second derivatives (Christoffel correction); sign tied to unit_normal.
double mean_curvature(const SurfacePatch& s, double u, double v,
                      const FdConfig& fd = {});

// Composition with an ambient isometry; partials by chain rule through
// isometry_differential.
SurfacePatch pushforward_surface(const SurfacePatch& s, const IsometryAction& action);

// Largest |chart(u + P, v) - chart(u, v)| style closure defect over a
// sample grid, for the declared periodic axes.
double periodicity_defect(const SurfacePatch& s, int samples = 17);

// Smallest |f_u x f_v| over a sample grid; throws DegenerateImmersion
// below the threshold.
double immersion_defect(const SurfacePatch& s, int samples = 17);
void validate_immersion(const SurfacePatch& s, int samples = 17,
                        double threshold = 1e-10);

}  // namespace nflux
