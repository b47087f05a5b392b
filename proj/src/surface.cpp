#include "nflux/surface.hpp"

#include <cmath>

namespace nflux {

bool SurfacePatch::in_domain(double u, double v, double margin) const {
  bool u_ok = periodic_u || (u >= u_min - margin && u <= u_max + margin);
  bool v_ok = periodic_v || (v >= v_min - margin && v <= v_max + margin);
  return u_ok && v_ok;
}

void SurfacePatch::require_in_domain(double u, double v) const {
  if (!in_domain(u, v)) {
    throw Error(ErrorKind::ParamOutsideDomain,
                "(u, v) outside the parameter domain of " + name);
  }
}

Point surface_point(const SurfacePatch& s, double u, double v) {
  return s.chart(u, v);
}

std::pair<Vec3, Vec3> surface_partials(const SurfacePatch& s, double u, double v) {
  if (s.partials) return s.partials(u, v);
  double h = s.fd_first;
  Vec3 fu = (s.chart(u + h, v) - s.chart(u - h, v)) / (2.0 * h);
  Vec3 fv = (s.chart(u, v + h) - s.chart(u, v - h)) / (2.0 * h);
  return {fu, fv};
}

TangentVector differential(const SurfacePatch& s, double u, double v, const Vec2& w) {
  s.require_in_domain(u, v);
  auto [fu, fv] = surface_partials(s, u, v);
  return coordinate_vector(s.chart(u, v), w[0] * fu + w[1] * fv);
}

TangentVector unit_normal(const SurfacePatch& s, double u, double v) {
  auto [fu, fv] = surface_partials(s, u, v);
  Point p = s.chart(u, v);
  TangentVector n = cross(s.space, coordinate_vector(p, fu), coordinate_vector(p, fv));
  double len = n.comps.norm();  // frame components, so Euclidean norm
  if (len < 1e-10) {
    throw Error(ErrorKind::DegenerateImmersion,
                "|f_u x f_v| below the immersion threshold");
  }
  n.comps /= len;
  return n;
}

TangentVector star_df(const SurfacePatch& s, double u, double v, const Vec2& w) {
  TangentVector df = differential(s, u, v, w);
  TangentVector n = unit_normal(s, u, v);
  return cross(s.space, df, n);
}

double mean_curvature(const SurfacePatch& s, double u, double v, const FdConfig& fd) {
  Point p = s.chart(u, v);
  auto [fu, fv] = surface_partials(s, u, v);

  double h = s.partials ? 1e-5 : s.fd_second;
  auto pu = [&](double uu, double vv) { return surface_partials(s, uu, vv).first; };
  auto pv = [&](double uu, double vv) { return surface_partials(s, uu, vv).second; };
  Vec3 fuu = (pu(u + h, v) - pu(u - h, v)) / (2.0 * h);
  Vec3 fuv = (pu(u, v + h) - pu(u, v - h)) / (2.0 * h);
  Vec3 fvv = (pv(u, v + h) - pv(u, v - h)) / (2.0 * h);

  Mat3 g = metric_at(s.space, p);
  auto gamma = christoffel_at(s.space, p, fd);
  auto covariant = [&](const Vec3& second, const Vec3& a, const Vec3& b) -> Vec3 {
    Vec3 out = second;
    for (int k = 0; k < 3; ++k) out[k] += a.dot(gamma[k] * b);
    return out;
  };

  TangentVector n = unit_normal(s, u, v);
  Vec3 nc = to_coordinate(s.space, n).comps;
  auto dotg = [&](const Vec3& a, const Vec3& b) { return a.dot(g * b); };

  double E = dotg(fu, fu), F = dotg(fu, fv), G = dotg(fv, fv);
  double L = dotg(covariant(fuu, fu, fu), nc);
  double M = dotg(covariant(fuv, fu, fv), nc);
  double Nc = dotg(covariant(fvv, fv, fv), nc);

  double det = E * G - F * F;
  if (det <= 0.0) {
    throw Error(ErrorKind::DegenerateImmersion, "degenerate first fundamental form");
  }
  return 0.5 * (E * Nc - 2.0 * F * M + G * L) / det;
}

SurfacePatch pushforward_surface(const SurfacePatch& s, const IsometryAction& action) {
  require_symmetry(action.space, action.which);
  SurfacePatch out = s;
  AmbientSpace space = action.space;
  SymmetryId which = action.which;
  double t = action.t;
  auto base_chart = s.chart;
  out.chart = [space, which, t, base_chart](double u, double v) -> Point {
    return isometry_apply(space, which, t, base_chart(u, v));
  };
  auto base_partials = s.partials;
  if (base_partials) {
    out.partials = [space, which, t, base_chart,
                    base_partials](double u, double v) -> std::pair<Vec3, Vec3> {
      Point p = base_chart(u, v);
      auto [fu, fv] = base_partials(u, v);
      Vec3 gu = isometry_differential(space, which, t, p, coordinate_vector(p, fu)).comps;
      Vec3 gv = isometry_differential(space, which, t, p, coordinate_vector(p, fv)).comps;
      return {gu, gv};
    };
  }
  out.name = s.name + "+" + symmetry_name(which) + "(" + std::to_string(t) + ")";
  return out;
}

double periodicity_defect(const SurfacePatch& s, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double u = s.u_min + (s.u_max - s.u_min) * i / double(samples - 1);
    for (int j = 0; j < samples; ++j) {
      double v = s.v_min + (s.v_max - s.v_min) * j / double(samples - 1);
      if (s.periodic_u) {
        worst = std::max(worst, (s.chart(u + s.period_u, v) - s.chart(u, v)).norm());
      }
      if (s.periodic_v) {
        worst = std::max(worst, (s.chart(u, v + s.period_v) - s.chart(u, v)).norm());
      }
    }
  }
  return worst;
}

double immersion_defect(const SurfacePatch& s, int samples) {
  double least = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double u = s.u_min + (s.u_max - s.u_min) * i / double(samples - 1);
    for (int j = 0; j < samples; ++j) {
      double v = s.v_min + (s.v_max - s.v_min) * j / double(samples - 1);
      Point p = s.chart(u, v);
      auto [fu, fv] = surface_partials(s, u, v);
      TangentVector c =
          cross(s.space, coordinate_vector(p, fu), coordinate_vector(p, fv));
      least = std::min(least, c.comps.norm());
    }
  }
  return least;
}

void validate_immersion(const SurfacePatch& s, int samples, double threshold) {
  if (immersion_defect(s, samples) <= threshold) {
    throw Error(ErrorKind::DegenerateImmersion,
                "patch fails the immersion condition on the sample grid");
  }
}

}  // namespace nflux
