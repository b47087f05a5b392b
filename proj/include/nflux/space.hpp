#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "nflux/errors.hpp"
#include "nflux/types.hpp"

namespace nflux {

enum class SpaceKind { E3KappaTau, Sol3 };

// Homogeneous 3-manifold descriptor.
//
// E^3(kappa, tau): model Omega_kappa x R, coordinates (w = x1 + i x2, x3),
//   ds^2 = lambda^2 |dw|^2 + (tau lambda (x2 dx1 - x1 dx2) + dx3)^2,
//   lambda = 1 / (1 + kappa' |w|^2), kappa' = kappa / 4,
//   Omega_kappa = C if kappa >= 0, the disk of radius 2|kappa|^{-1/2} else.
//
// Sol3: R^3 with ds^2 = e^{2 x3} dx1^2 + e^{-2 x3} dx2^2 + dx3^2.
class AmbientSpace {
 public:
  static AmbientSpace e3(double kappa, double tau) {
    double d = kappa - 4.0 * tau * tau;
    if (std::abs(d) < 1e-14 * std::max({1.0, std::abs(kappa), 4.0 * tau * tau})) {
      throw Error(ErrorKind::ConfigError,
                  "E3(kappa, tau) requires kappa - 4 tau^2 != 0");
    }
    return AmbientSpace(SpaceKind::E3KappaTau, kappa, tau);
  }

  static AmbientSpace sol3() { return AmbientSpace(SpaceKind::Sol3, 0.0, 0.0); }

  static AmbientSpace nil3() { return e3(0.0, 0.5); }
  static AmbientSpace h2xr() { return e3(-1.0, 0.0); }

  SpaceKind kind() const { return kind_; }
  bool is_sol3() const { return kind_ == SpaceKind::Sol3; }
  bool is_e3() const { return kind_ == SpaceKind::E3KappaTau; }

  double kappa() const { return kappa_; }
  double tau() const { return tau_; }
  double kappa_prime() const { return kappa_ / 4.0; }

  // sigma = kappa / (2 tau); only meaningful when tau != 0.
  double sigma() const { return kappa_ / (2.0 * tau_); }
  // 1/sigma = 2 tau / kappa, which stays finite when tau = 0; only
  // meaningful when kappa != 0.
  double sigma_inverse() const { return 2.0 * tau_ / kappa_; }

  std::complex<double> w(const Point& p) const { return {p[0], p[1]}; }

  double lambda(const Point& p) const {
    return 1.0 / (1.0 + kappa_prime() * (p[0] * p[0] + p[1] * p[1]));
  }

  // Radius of Omega_kappa (infinite unless kappa < 0).
  double domain_radius() const {
    if (is_e3() && kappa_ < 0.0) return 2.0 / std::sqrt(-kappa_);
    return std::numeric_limits<double>::infinity();
  }

  bool in_domain(const Point& p) const {
    if (is_e3() && kappa_ < 0.0) {
      double r2 = p[0] * p[0] + p[1] * p[1];
      double R = domain_radius();
      return r2 < R * R;
    }
    return true;
  }

  void require_in_domain(const Point& p) const {
    if (!in_domain(p)) {
      throw Error(ErrorKind::PointOutsideDomain,
                  "point lies outside the chart domain Omega_kappa x R");
    }
  }

  std::string name() const {
    if (is_sol3()) return "Sol3";
    return "E3(" + std::to_string(kappa_) + ", " + std::to_string(tau_) + ")";
  }

  bool operator==(const AmbientSpace& o) const {
    return kind_ == o.kind_ && kappa_ == o.kappa_ && tau_ == o.tau_;
  }

 private:
  AmbientSpace(SpaceKind kind, double kappa, double tau)
      : kind_(kind), kappa_(kappa), tau_(tau) {}

  SpaceKind kind_;
  double kappa_;
  double tau_;
};

}  // namespace nflux
