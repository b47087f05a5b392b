#include "nflux/geometry.hpp"

#include <array>
#include <cmath>

namespace nflux {

namespace {

void require_same_base(const TangentVector& u, const TangentVector& v) {
  double scale = 1.0 + u.base.norm() + v.base.norm();
  if ((u.base - v.base).norm() > 1e-12 * scale) {
    throw Error(ErrorKind::BasePointMismatch,
                "tangent vectors are based at different points");
  }
}

// Central difference of a vector-valued function of one coordinate slot.
template <typename F>
auto central_diff(const F& f, const Point& p, int i, double h) {
  Point pp = p, pm = p;
  pp[i] += h;
  pm[i] -= h;
  return ((f(pp) - f(pm)) / (2.0 * h)).eval();
}

template <typename F>
auto diff_with_config(const F& f, const Point& p, int i, const FdConfig& fd) {
  if (!fd.richardson) return central_diff(f, p, i, fd.h);
  auto d1 = central_diff(f, p, i, fd.h);
  auto d2 = central_diff(f, p, i, fd.h / 2.0);
  return ((4.0 * d2 - d1) / 3.0).eval();
}

}  // namespace

Mat3 metric_at(const AmbientSpace& space, const Point& p) {
  space.require_in_domain(p);
  Mat3 g;
  if (space.is_sol3()) {
    g.setZero();
    g(0, 0) = std::exp(2.0 * p[2]);
    g(1, 1) = std::exp(-2.0 * p[2]);
    g(2, 2) = 1.0;
    return g;
  }
  // ds^2 = lambda^2 |dw|^2 + (b . dw + dx3)^2 with b = tau lambda (x2, -x1).
  double lam = space.lambda(p);
  double b1 = space.tau() * lam * p[1];
  double b2 = -space.tau() * lam * p[0];
  g(0, 0) = lam * lam + b1 * b1;
  g(0, 1) = b1 * b2;
  g(0, 2) = b1;
  g(1, 0) = g(0, 1);
  g(1, 1) = lam * lam + b2 * b2;
  g(1, 2) = b2;
  g(2, 0) = g(0, 2);
  g(2, 1) = g(1, 2);
  g(2, 2) = 1.0;
  return g;
}

Mat3 frame_at(const AmbientSpace& space, const Point& p) {
  space.require_in_domain(p);
  Mat3 F;
  if (space.is_sol3()) {
    F.setZero();
    F(0, 0) = std::exp(-p[2]);
    F(1, 1) = std::exp(p[2]);
    F(2, 2) = 1.0;
    return F;
  }
  double lam = space.lambda(p);
  double tau = space.tau();
  if (tau != 0.0) {
    double ang = space.sigma() * p[2];
    double c = std::cos(ang), s = std::sin(ang);
    F.col(0) << c / lam, s / lam, tau * (p[0] * s - p[1] * c);
    F.col(1) << -s / lam, c / lam, tau * (p[0] * c + p[1] * s);
  } else {
    F.col(0) << 1.0 / lam, 0.0, 0.0;
    F.col(1) << 0.0, 1.0 / lam, 0.0;
  }
  F.col(2) << 0.0, 0.0, 1.0;
  return F;
}

TangentVector to_coordinate(const AmbientSpace& space, const TangentVector& v) {
  if (v.basis == Basis::Coordinate) return v;
  Mat3 F = frame_at(space, v.base);
  return coordinate_vector(v.base, F * v.comps);
}

TangentVector to_frame(const AmbientSpace& space, const TangentVector& v) {
  if (v.basis == Basis::Frame) return v;
  Mat3 F = frame_at(space, v.base);
  Mat3 g = metric_at(space, v.base);
  // Orthonormal frame: frame components are metric projections on E_i.
  return frame_vector(v.base, F.transpose() * (g * v.comps));
}

TangentVector to_basis(const AmbientSpace& space, const TangentVector& v, Basis basis) {
  return basis == Basis::Coordinate ? to_coordinate(space, v) : to_frame(space, v);
}

double inner(const AmbientSpace& space, const TangentVector& u, const TangentVector& v) {
  require_same_base(u, v);
  TangentVector uf = to_frame(space, u);
  TangentVector vf = to_frame(space, v);
  return uf.comps.dot(vf.comps);
}

double norm(const AmbientSpace& space, const TangentVector& u) {
  return std::sqrt(std::max(0.0, inner(space, u, u)));
}

TangentVector cross(const AmbientSpace& space, const TangentVector& u,
                    const TangentVector& v) {
  require_same_base(u, v);
  TangentVector uf = to_frame(space, u);
  TangentVector vf = to_frame(space, v);
  return frame_vector(u.base, uf.comps.cross(vf.comps));
}

std::array<Mat3, 3> christoffel_at(const AmbientSpace& space, const Point& p,
                                   const FdConfig& fd) {
  space.require_in_domain(p);
  auto metric = [&space](const Point& q) { return metric_at(space, q); };
  std::array<Mat3, 3> dg;  // dg[k] = d metric / d x_k
  for (int k = 0; k < 3; ++k) dg[k] = diff_with_config(metric, p, k, fd);
  Mat3 ginv = metric_at(space, p).inverse();
  std::array<Mat3, 3> gamma;
  for (int k = 0; k < 3; ++k) gamma[k].setZero();
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      Vec3 lowered;
      for (int l = 0; l < 3; ++l) {
        lowered[l] = 0.5 * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
      }
      Vec3 raised = ginv * lowered;
      for (int k = 0; k < 3; ++k) {
        gamma[k](i, j) = raised[k];
        gamma[k](j, i) = raised[k];
      }
    }
  }
  return gamma;
}

double divergence(const AmbientSpace& space, const VectorField& X, const Point& p,
                  const FdConfig& fd) {
  space.require_in_domain(p);
  auto weighted = [&](const Point& q) -> Vec3 {
    double sg = std::sqrt(metric_at(space, q).determinant());
    return sg * X(q);
  };
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += diff_with_config(weighted, p, i, fd)[i];
  return sum / std::sqrt(metric_at(space, p).determinant());
}

TangentVector curl_frame(const AmbientSpace& space, const FrameField& X,
                         const Point& p, const FdConfig& fd) {
  space.require_in_domain(p);
  Mat3 F = frame_at(space, p);
  // d[i][j] = dX^i(E_j): central differences along the frame directions.
  Mat3 d;
  for (int j = 0; j < 3; ++j) {
    Vec3 dir = F.col(j);
    Point pp = p + fd.h * dir;
    Point pm = p - fd.h * dir;
    Vec3 dv = (X(pp) - X(pm)) / (2.0 * fd.h);
    for (int i = 0; i < 3; ++i) d(i, j) = dv[i];
  }
  Vec3 x = X(p);
  Vec3 out;
  if (space.is_sol3()) {
    out[0] = d(2, 1) - d(1, 2) + x[1];
    out[1] = d(0, 2) - d(2, 0) + x[0];
    out[2] = d(1, 0) - d(0, 1);
  } else if (space.tau() != 0.0) {
    double sig = space.sigma();
    out[0] = d(2, 1) - d(1, 2) - sig * x[0];
    out[1] = d(0, 2) - d(2, 0) - sig * x[1];
    out[2] = d(1, 0) - d(0, 1) - 2.0 * space.tau() * x[2];
  } else {
    double kp = space.kappa_prime();
    out[0] = d(2, 1) - d(1, 2);
    out[1] = d(0, 2) - d(2, 0);
    out[2] = d(1, 0) - d(0, 1) + 2.0 * kp * (p[1] * x[0] - p[0] * x[1]);
  }
  return frame_vector(p, out);
}

TangentVector curl_numeric(const AmbientSpace& space, const VectorField& X,
                           const Point& p, const FdConfig& fd) {
  space.require_in_domain(p);
  auto flat = [&](const Point& q) -> Vec3 { return metric_at(space, q) * X(q); };
  Mat3 dflat;  // dflat(j, k) = d_j (X^flat)_k
  for (int j = 0; j < 3; ++j) {
    Vec3 row = diff_with_config(flat, p, j, fd);
    dflat.row(j) = row.transpose();
  }
  double sg = std::sqrt(metric_at(space, p).determinant());
  // (curl X)^i = (1/sqrt(g)) eps^{ijk} d_j (X^flat)_k; the frame
  // (E1, E2, E3) is positively oriented for the chart coordinates.
  Vec3 out;
  out[0] = (dflat(1, 2) - dflat(2, 1)) / sg;
  out[1] = (dflat(2, 0) - dflat(0, 2)) / sg;
  out[2] = (dflat(0, 1) - dflat(1, 0)) / sg;
  return coordinate_vector(p, out);
}

TangentVector covariant_derivative(const AmbientSpace& space, const VectorField& X,
                                   const TangentVector& u, const FdConfig& fd) {
  const Point& p = u.base;
  Vec3 uc = to_coordinate(space, u).comps;
  Mat3 dX;  // dX(k, j) = d_j X^k
  for (int j = 0; j < 3; ++j) dX.col(j) = diff_with_config(X, p, j, fd);
  auto gamma = christoffel_at(space, p, fd);
  Vec3 xp = X(p);
  Vec3 out = dX * uc;
  for (int k = 0; k < 3; ++k) out[k] += uc.dot(gamma[k] * xp);
  return coordinate_vector(p, out);
}

TangentVector gradient(const AmbientSpace& space,
                       const std::function<double(const Point&)>& psi, const Point& p,
                       const FdConfig& fd) {
  Vec3 dpsi;
  for (int i = 0; i < 3; ++i) {
    Point pp = p, pm = p;
    pp[i] += fd.h;
    pm[i] -= fd.h;
    dpsi[i] = (psi(pp) - psi(pm)) / (2.0 * fd.h);
  }
  return coordinate_vector(p, metric_at(space, p).inverse() * dpsi);
}

FrameField frame_components_field(const AmbientSpace& space, const VectorField& X) {
  return [&space, X](const Point& q) -> Vec3 {
    return to_frame(space, coordinate_vector(q, X(q))).comps;
  };
}

}  // namespace nflux
