#pragma once

#include <memory>
#include <string>

#include "nflux/noether.hpp"
#include "nflux/ode.hpp"

namespace nflux {

// ---------------------------------------------------------------------------
// Vertical catenoids in Nil3: rotationally invariant minimal surfaces
//   X_a(t, theta) = (f(a,t) cos theta, f(a,t) sin theta, t),
// where f solves f (f^2 + 4) f_tt = 4 (1 + f_t^2), f(0) = a, f_t(0) = 0.
// ---------------------------------------------------------------------------

struct CatenoidProfile {
  double a = 1.0;
  double T = 2.0;
  double tol = 1e-12;
  HermiteTable f;  // tabulated on [-T - margin, T + margin]

  double value(double t) const { return f.eval(t); }
  double deriv(double t) const { return f.eval_d1(t); }
  double deriv2(double t) const { return f.eval_d2(t); }
};

CatenoidProfile catenoid_profile(double a, double T, double tol = 1e-12);

// The conserved quantity 2 f / sqrt(4 + f_t^2 (4 + f^2)), equal to a
// along the profile; 2 pi times it is the vertical flux at height t.
double catenoid_conserved_quantity(const CatenoidProfile& profile, double t);

struct VerticalCatenoid {
  std::shared_ptr<const CatenoidProfile> profile;
  SurfacePatch patch;  // (u, v) = (t, theta), v-periodic with period 2 pi

  // Cycle {x3 = t}, counterclockwise in theta.
  Cycle cycle(double t, int n = 2048) const;
};

VerticalCatenoid nil_vertical_catenoid(double a, double T, double tol = 1e-12);

// ---------------------------------------------------------------------------
// Horizontal catenoids in Nil3 (Daniel-Hauswirth system), built in the
// coordinates (y1, y2, y3) with y3 = x3 + x1 x2 / 2 and converted back to
// the standard chart.
// ---------------------------------------------------------------------------

struct DHCatenoidData {
  double alpha = 1.0;
  double theta = 0.0;           // closure parameter
  double C = 0.0;               // sin(2 theta) / (2 alpha)
  double U = 0.0;               // half period: phi(U) = phi(0) - pi
  double deck_shift = 0.0;      // beta(2U) / alpha
  double theta_residual = 0.0;  // residual of the theta equation at the root
  double closure_residual = 0.0;  // |C beta(2U) + alpha G(2U)|
  double tol = 1e-12;
  HermiteTable phi, beta, G;

  double cos2theta() const { return std::cos(2.0 * theta); }
  // phi' = -sqrt(P(cos phi)), the regular branch of the phase ODE.
  double phi_prime(double u) const;
  double beta_prime(double u) const;
  double G_prime(double u) const;
};

// Root of the closure equation for theta in (0, pi/4), restricted to the
// range where P(t) = alpha^2 + cos(2 theta) t^2 - C^2 t^4 stays positive.
double dh_theta_solve(double alpha, double tol = 1e-12);

struct HorizontalCatenoid {
  std::shared_ptr<const DHCatenoidData> data;
  // (u, v) sheared so that the patch is honestly periodic in u with
  // period 2U: chart(u, v) = f_alpha(u, v - deck_shift * u / (2U)).
  SurfacePatch patch;

  // Cycle {y2 = level}, one full period in u.
  Cycle cycle(double level, int n = 2048) const;
};

HorizontalCatenoid nil_horizontal_catenoid(double alpha, double tol = 1e-12);

// Closed-form and direct-integral expressions of sigma_2 for the
// horizontal catenoid, used as oracles against the flux quadrature.
double dh_sigma2_closed_form(const DHCatenoidData& data);
double dh_sigma2_integral(const DHCatenoidData& data, int n = 4096);

// ---------------------------------------------------------------------------
// CMC-1/2 rotational vertical ends in H^2 x R = E^3(-1, 0):
//   X_beta(r, theta) = (4 r / (1 + r^2) e^{i theta}, h_beta(r)),
// the first factor written in the chart of radius 2.
// ---------------------------------------------------------------------------

struct RotationalEndData {
  double beta = 1.0;
  double r_lo = 0.55, r_hi = 0.95;
  bool closed_form = false;  // beta = 1: h_1(r) = 2 (1 + r^2) / (1 - r^2)
  HermiteTable h;

  double h_value(double r) const;
  double h_d1(double r) const;
  double h_d2(double r) const;
};

RotationalEndData h2r_profile(double beta, double tol = 1e-13, double r_lo = 0.55,
                              double r_hi = 0.95);

// Direct evaluation of the defining integral (endpoint singularity removed
// by t = t0 + s^2); oracle for the tabulated profile.
double h2r_integral(double beta, double r, double tol = 1e-13);

struct RotationalEnd {
  std::shared_ptr<const RotationalEndData> data;
  SurfacePatch patch;  // (u, v) = (r, theta)

  Cycle cycle(double r, int n = 2048) const;
};

RotationalEnd h2r_rotational_end(double beta, double tol = 1e-13, double r_lo = 0.55,
                                 double r_hi = 0.95);

// ---------------------------------------------------------------------------
// Sol3 horizontal plane x3 = 0, the minimal test surface for the Sol3
// vanishing proposition.
// ---------------------------------------------------------------------------

SurfacePatch sol3_horizontal_plane();

Cycle circle_cycle(const Vec2& center, double radius, int n = 2048,
                   const std::string& id = "circle");

// CSV exports (header row, LF endings, '.' decimal).
std::string catenoid_csv(const CatenoidProfile& profile, int rows = 201);
std::string dh_csv(const DHCatenoidData& data, int rows = 201);
std::string h2r_csv(const RotationalEndData& data, int rows = 201);

}  // namespace nflux
