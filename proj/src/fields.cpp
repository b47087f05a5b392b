#include "nflux/fields.hpp"

#include <cmath>
#include <complex>

namespace nflux {

namespace {

using Complex = std::complex<double>;

Vec3 horizontal_part(const AmbientSpace& space, const TangentVector& v) {
  Vec3 f = to_frame(space, v).comps;
  f[2] = 0.0;
  return f;
}

}  // namespace

std::string symmetry_name(SymmetryId id) {
  switch (id) {
    case SymmetryId::Translation1: return "Translation1";
    case SymmetryId::Translation2: return "Translation2";
    case SymmetryId::Translation3: return "Translation3";
    case SymmetryId::Rotation: return "Rotation";
  }
  return "?";
}

bool symmetry_valid(const AmbientSpace& space, SymmetryId id) {
  if (space.is_sol3() && id == SymmetryId::Rotation) return false;
  return true;
}

void require_symmetry(const AmbientSpace& space, SymmetryId id) {
  if (!symmetry_valid(space, id)) {
    throw Error(ErrorKind::InvalidSymmetry,
                "the isometry group of Sol3 is of dimension 3: there is no "
                "rotation family");
  }
}

std::vector<SymmetryId> symmetries_of(const AmbientSpace& space) {
  std::vector<SymmetryId> out = {SymmetryId::Translation1, SymmetryId::Translation2,
                                 SymmetryId::Translation3};
  if (!space.is_sol3()) out.push_back(SymmetryId::Rotation);
  return out;
}

double moebius_parameter(double kappa_prime, double t) {
  if (kappa_prime > 0.0) {
    double r = std::sqrt(kappa_prime);
    return std::tan(r * t) / r;
  }
  if (kappa_prime < 0.0) {
    double r = std::sqrt(-kappa_prime);
    return std::tanh(r * t) / r;
  }
  return t;
}

TangentVector killing_field(const AmbientSpace& space, SymmetryId which,
                            const Point& p) {
  require_symmetry(space, which);
  space.require_in_domain(p);
  Vec3 c;
  if (space.is_sol3()) {
    switch (which) {
      case SymmetryId::Translation1: c << 1.0, 0.0, 0.0; break;
      case SymmetryId::Translation2: c << 0.0, 1.0, 0.0; break;
      case SymmetryId::Translation3: c << -p[0], p[1], 1.0; break;
      default: c.setZero(); break;
    }
    return coordinate_vector(p, c);
  }
  double kp = space.kappa_prime();
  double tau = space.tau();
  switch (which) {
    case SymmetryId::Translation1:
      c << 1.0 + kp * (p[0] * p[0] - p[1] * p[1]), 2.0 * kp * p[0] * p[1], tau * p[1];
      break;
    case SymmetryId::Translation2:
      c << 2.0 * kp * p[0] * p[1], 1.0 - kp * (p[0] * p[0] - p[1] * p[1]), -tau * p[0];
      break;
    case SymmetryId::Translation3:
      c << 0.0, 0.0, 1.0;
      break;
    case SymmetryId::Rotation:
      c << -p[1], p[0], 0.0;
      break;
  }
  return coordinate_vector(p, c);
}

TangentVector potential_vector(const AmbientSpace& space, SymmetryId which,
                               const Point& p) {
  require_symmetry(space, which);
  space.require_in_domain(p);
  if (space.is_sol3()) {
    switch (which) {
      case SymmetryId::Translation1:
        return frame_vector(p, {0.0, 0.0, p[1]});
      case SymmetryId::Translation2:
        return frame_vector(p, {0.0, 0.0, -p[0]});
      case SymmetryId::Translation3:
        return frame_vector(p, {-0.5 * p[1] * std::exp(-p[2]),
                                0.5 * p[0] * std::exp(p[2]), -p[0] * p[1]});
      default:
        break;
    }
  }
  double tau = space.tau();
  double kp = space.kappa_prime();
  double lam = space.lambda(p);
  if (which == SymmetryId::Translation3) {
    if (tau != 0.0) return frame_vector(p, {0.0, 0.0, -1.0 / (2.0 * tau)});
    return frame_vector(p, {-0.5 * p[1], 0.5 * p[0], 0.0});
  }
  if (space.kappa() != 0.0) {
    // F_i = (1/sigma) S_i^h + (vertical term) E3 with 1/sigma = 2 tau / kappa.
    double si = space.sigma_inverse();
    Vec3 f = si * horizontal_part(space, killing_field(space, which, p));
    switch (which) {
      case SymmetryId::Translation1: f[2] += lam * p[1]; break;
      case SymmetryId::Translation2: f[2] -= lam * p[0]; break;
      case SymmetryId::Rotation: f[2] += lam / (2.0 * kp); break;
      default: break;
    }
    return frame_vector(p, f);
  }
  // kappa = 0 (so tau != 0): the Heisenberg-type potentials.
  switch (which) {
    case SymmetryId::Translation1:
      return frame_vector(p, {0.0, tau * p[0] * p[1] - p[2], 0.0});
    case SymmetryId::Translation2:
      return frame_vector(p, {tau * p[0] * p[1] + p[2], 0.0, 0.0});
    case SymmetryId::Rotation:
      return frame_vector(p, {p[0] * p[2], p[1] * p[2], 0.0});
    default:
      break;
  }
  throw Error(ErrorKind::PotentialUnavailable, "no potential vector branch");
}

TangentVector volume_field(const AmbientSpace& space, const Point& p) {
  space.require_in_domain(p);
  return frame_vector(p, {0.0, 0.0, p[2]});
}

Point isometry_apply(const AmbientSpace& space, SymmetryId which, double t,
                     const Point& p) {
  require_symmetry(space, which);
  space.require_in_domain(p);
  if (space.is_sol3()) {
    switch (which) {
      case SymmetryId::Translation1: return {p[0] + t, p[1], p[2]};
      case SymmetryId::Translation2: return {p[0], p[1] + t, p[2]};
      case SymmetryId::Translation3:
        return {std::exp(-t) * p[0], std::exp(t) * p[1], p[2] + t};
      default: break;
    }
  }
  double kp = space.kappa_prime();
  double kappa = space.kappa();
  double tau = space.tau();
  Complex w = space.w(p);
  Point out = p;
  switch (which) {
    case SymmetryId::Translation1: {
      double c = moebius_parameter(kp, t);
      Complex den = 1.0 - kp * c * w;
      Complex wp = (c + w) / den;
      double shift = (kappa != 0.0) ? -(4.0 * tau / kappa) * std::arg(den)
                                    : tau * c * p[1];
      out << wp.real(), wp.imag(), p[2] + shift;
      break;
    }
    case SymmetryId::Translation2: {
      double c = moebius_parameter(kp, t);
      Complex den = 1.0 + Complex(0.0, 1.0) * kp * c * w;
      Complex wp = (Complex(0.0, c) + w) / den;
      double shift = (kappa != 0.0) ? -(4.0 * tau / kappa) * std::arg(den)
                                    : -tau * c * p[0];
      out << wp.real(), wp.imag(), p[2] + shift;
      break;
    }
    case SymmetryId::Translation3:
      out[2] += t;
      break;
    case SymmetryId::Rotation: {
      Complex wp = w * std::exp(Complex(0.0, t));
      out << wp.real(), wp.imag(), p[2];
      break;
    }
  }
  space.require_in_domain(out);
  return out;
}

TangentVector isometry_differential(const AmbientSpace& space, SymmetryId which,
                                    double t, const Point& p, const TangentVector& v,
                                    double h) {
  Vec3 vc = to_coordinate(space, v).comps;
  Point q = isometry_apply(space, which, t, p);
  double n = vc.norm();
  if (n == 0.0) return coordinate_vector(q, Vec3::Zero());
  Vec3 dir = vc / n;
  Point pp = p + h * dir;
  Point pm = p - h * dir;
  Vec3 jac = (isometry_apply(space, which, t, pp) - isometry_apply(space, which, t, pm)) /
             (2.0 * h);
  return coordinate_vector(q, n * jac);
}

double group_law_check(const AmbientSpace& space, SymmetryId which, double t, double s,
                       const std::vector<Point>& points) {
  double worst = 0.0;
  for (const Point& p : points) {
    Point a = isometry_apply(space, which, t, isometry_apply(space, which, s, p));
    Point b = isometry_apply(space, which, t + s, p);
    worst = std::max(worst, (a - b).norm());
  }
  return worst;
}

VectorField killing_field_of(const AmbientSpace& space, SymmetryId which) {
  return [space, which](const Point& q) -> Vec3 {
    return killing_field(space, which, q).comps;
  };
}

VectorField potential_field_of(const AmbientSpace& space, SymmetryId which) {
  return [space, which](const Point& q) -> Vec3 {
    return to_coordinate(space, potential_vector(space, which, q)).comps;
  };
}

VectorField volume_field_of(const AmbientSpace& space) {
  return [space](const Point& q) -> Vec3 {
    return to_coordinate(space, volume_field(space, q)).comps;
  };
}

}  // namespace nflux
