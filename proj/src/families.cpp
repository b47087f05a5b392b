#include "nflux/families.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "nflux/quadrature.hpp"
#include "nflux/rootfind.hpp"

namespace nflux {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_row(std::initializer_list<double> values) {
  std::string out;
  char buf[64];
  bool first = true;
  for (double v : values) {
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    if (!first) out += ",";
    out += buf;
    first = false;
  }
  out += "\n";
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, double max_spacing) {
  int n = std::max(2, int(std::ceil((hi - lo) / max_spacing)) + 1);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / double(n - 1);
  return out;
}

}  // namespace

// ------------------------------ vertical catenoid ------------------------

CatenoidProfile catenoid_profile(double a, double T, double tol) {
  if (a <= 0.0) {
    throw Error(ErrorKind::NonPositiveNeck, "catenoid neck size must be positive");
  }
  if (T <= 0.0) {
    throw Error(ErrorKind::ConfigError, "profile half-length T must be positive");
  }
  using RK = RungeKutta54<2>;
  auto rhs = [](double, const RK::State& y) -> RK::State {
    double f = y[0], g = y[1];
    return RK::State(g, 4.0 * (1.0 + g * g) / (f * (f * f + 4.0)));
  };
  auto f_tt = [](double f, double g) {
    return 4.0 * (1.0 + g * g) / (f * (f * f + 4.0));
  };

  CatenoidProfile profile;
  profile.a = a;
  profile.T = T;
  profile.tol = tol;
  double span = T + 0.1;
  OdeOptions opt;
  opt.rtol = tol;
  opt.atol = tol;

  RK::State y0(a, 0.0);
  std::vector<double> fwd = uniform_grid(0.0, span, 1e-3);
  std::vector<std::array<double, 4>> nodes;  // (t, f, f_t, f_tt)
  RK::integrate_grid(rhs, fwd, y0, opt, [&](double t, const RK::State& y) {
    nodes.push_back({t, y[0], y[1], f_tt(y[0], y[1])});
  });
  std::vector<double> bwd = uniform_grid(0.0, -span, 1e-3);
  std::vector<std::array<double, 4>> neg;
  RK::integrate_grid(rhs, bwd, y0, opt, [&](double t, const RK::State& y) {
    if (t < 0.0) neg.push_back({t, y[0], y[1], f_tt(y[0], y[1])});
  });
  profile.f.reserve(nodes.size() + neg.size());
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) {
    profile.f.push_back((*it)[0], (*it)[1], (*it)[2], (*it)[3]);
  }
  for (const auto& n : nodes) profile.f.push_back(n[0], n[1], n[2], n[3]);
  if (!std::isfinite(profile.f.eval(T))) {
    throw Error(ErrorKind::SolverFailure, "catenoid profile integration failed");
  }
  return profile;
}

double catenoid_conserved_quantity(const CatenoidProfile& profile, double t) {
  double f = profile.value(t), g = profile.deriv(t);
  return 2.0 * f / std::sqrt(4.0 + g * g * (4.0 + f * f));
}

Cycle VerticalCatenoid::cycle(double t, int n) const {
  Cycle c;
  c.curve = [t](double s) { return Vec2(t, 2.0 * kPi * s); };
  c.derivative = [](double) { return Vec2(0.0, 2.0 * kPi); };
  c.samples = n;
  c.id = "x3=" + std::to_string(t);
  return c;
}

VerticalCatenoid nil_vertical_catenoid(double a, double T, double tol) {
  auto profile = std::make_shared<const CatenoidProfile>(catenoid_profile(a, T, tol));
  SurfacePatch patch;
  patch.space = AmbientSpace::nil3();
  patch.chart = [profile](double u, double v) -> Point {
    double f = profile->value(u);
    return {f * std::cos(v), f * std::sin(v), u};
  };
  patch.partials = [profile](double u, double v) -> std::pair<Vec3, Vec3> {
    double f = profile->value(u), g = profile->deriv(u);
    double c = std::cos(v), s = std::sin(v);
    return {Vec3(g * c, g * s, 1.0), Vec3(-f * s, f * c, 0.0)};
  };
  patch.u_min = -T;
  patch.u_max = T;
  patch.v_min = 0.0;
  patch.v_max = 2.0 * kPi;
  patch.periodic_v = true;
  patch.period_v = 2.0 * kPi;
  patch.name = "nil3 vertical catenoid a=" + std::to_string(a);
  validate_immersion(patch);
  return VerticalCatenoid{profile, patch};
}

// ------------------------------ horizontal catenoid ----------------------

namespace {

struct DHParams {
  double alpha, C, cos2t;
  double P(double t) const {
    double t2 = t * t;
    return alpha * alpha + cos2t * t2 - C * C * t2 * t2;
  }
  double Pp(double t) const { return 2.0 * cos2t * t - 4.0 * C * C * t * t * t; }
};

DHParams dh_params(double alpha, double theta) {
  double C = std::sin(2.0 * theta) / (2.0 * alpha);
  return DHParams{alpha, C, std::cos(2.0 * theta)};
}

// LHS of the closure equation for theta, with the endpoint factor
// 1/sqrt(1 - t^2) removed by t = sin(psi).
double dh_theta_equation(double alpha, double theta) {
  DHParams par = dh_params(alpha, theta);
  auto integrand = [&par, alpha](double psi) {
    double t = std::sin(psi);
    double t2 = t * t;
    double P = par.P(t);
    double sq = std::sqrt(P);
    double num = 2.0 * alpha * par.C * par.C * t2 - alpha * par.cos2t +
                 par.C * par.C * t2 * sq;
    return num / (sq * (alpha + sq));
  };
  return 2.0 * adaptive_simpson(integrand, 0.0, kPi / 2.0, 1e-14);
}

// Largest theta keeping P positive on [-1, 1]: P(1) = 0 at cos(2 theta)
// = 1 - 2 alpha^2.
double dh_theta_upper(double alpha) {
  double c = 1.0 - 2.0 * alpha * alpha;
  if (c <= 0.0) return kPi / 4.0;
  return std::min(kPi / 4.0, 0.5 * std::acos(c));
}

}  // namespace

double dh_theta_solve(double alpha, double tol) {
  if (alpha <= 0.0) {
    throw Error(ErrorKind::ConfigError, "horizontal catenoid requires alpha > 0");
  }
  double upper = dh_theta_upper(alpha);
  auto q = [alpha](double th) { return dh_theta_equation(alpha, th); };
  // Scan for a sign change, approaching the upper end geometrically (the
  // equation diverges to +inf where P(+-1) -> 0).
  double prev_th = 1e-4 * upper;
  double prev_q = q(prev_th);
  double lo = 0.0, hi = 0.0;
  bool bracketed = false;
  for (int k = 1; k <= 60 && !bracketed; ++k) {
    double th = upper * (1.0 - std::pow(0.7, k));
    if (th <= prev_th) continue;
    double qv = q(th);
    if (std::signbit(qv) != std::signbit(prev_q)) {
      lo = prev_th;
      hi = th;
      bracketed = true;
    } else {
      prev_th = th;
      prev_q = qv;
    }
  }
  if (!bracketed) {
    throw Error(ErrorKind::NoBracket,
                "no sign change of the theta equation in (0, " + std::to_string(upper) +
                    ") for alpha = " + std::to_string(alpha));
  }
  double theta = bisect(q, lo, hi, std::max(tol, 1e-15));
  // The integrand must be real on [-1, 1] at the root.
  DHParams par = dh_params(alpha, theta);
  for (int i = 0; i <= 200; ++i) {
    if (par.P(-1.0 + i / 100.0) <= 0.0) {
      throw Error(ErrorKind::SolverFailure, "P(t) not positive at the theta root");
    }
  }
  return theta;
}

double DHCatenoidData::phi_prime(double u) const {
  DHParams par = dh_params(alpha, theta);
  return -std::sqrt(par.P(std::cos(phi.eval(u))));
}

double DHCatenoidData::beta_prime(double u) const {
  double c = std::cos(phi.eval(u));
  return C * c * c;
}

double DHCatenoidData::G_prime(double u) const {
  double c = std::cos(phi.eval(u));
  return (C * C * c * c - cos2theta()) / (alpha - phi_prime(u));
}

namespace {

struct DHState {
  double phi, beta, G;
};

DHCatenoidData build_dh_data(double alpha, double tol) {
  DHCatenoidData data;
  data.alpha = alpha;
  data.tol = tol;
  data.theta = dh_theta_solve(alpha, tol);
  data.theta_residual = std::abs(dh_theta_equation(alpha, data.theta));
  DHParams par = dh_params(alpha, data.theta);
  data.C = par.C;

  using RK = RungeKutta54<3>;
  auto rhs = [par, alpha](double, const RK::State& y) -> RK::State {
    double c = std::cos(y[0]);
    double pp = -std::sqrt(par.P(c));
    double bp = par.C * c * c;
    double gp = (par.C * par.C * c * c - par.cos2t) / (alpha - pp);
    return RK::State(pp, bp, gp);
  };
  // Second derivatives for the quintic table, all analytic in the state.
  auto second = [par, alpha](double phi) -> Vec3 {
    double c = std::cos(phi), s = std::sin(phi);
    double P = par.P(c);
    double sq = std::sqrt(P);
    double pp = -sq;
    double ppp = -par.Pp(c) * s / 2.0;  // d(phi')/du with phi' = -sqrt(P)
    double bpp = -2.0 * par.C * c * s * pp;
    double gnum = par.C * par.C * c * c - par.cos2t;
    double gnum_u = -2.0 * par.C * par.C * c * s * pp;
    double gpp = (gnum_u * (alpha - pp) + gnum * ppp) / ((alpha - pp) * (alpha - pp));
    return {ppp, bpp, gpp};
  };

  double pmin = std::min(par.P(0.0), par.P(1.0));
  double u_hi = 2.2 * 2.0 * kPi / std::sqrt(pmin);
  double u_lo = -0.5;
  OdeOptions opt;
  opt.rtol = tol;
  opt.atol = tol;

  std::vector<std::array<double, 4>> nodes;  // (u, phi, beta, G)
  RK::State y0(0.0, 0.0, 0.0);
  RK::integrate_grid(rhs, uniform_grid(0.0, u_hi, 8e-4), y0, opt,
                     [&](double u, const RK::State& y) {
                       nodes.push_back({u, y[0], y[1], y[2]});
                     });
  std::vector<std::array<double, 4>> neg;
  RK::integrate_grid(rhs, uniform_grid(0.0, u_lo, 8e-4), y0, opt,
                     [&](double u, const RK::State& y) {
                       if (u < 0.0) neg.push_back({u, y[0], y[1], y[2]});
                     });

  data.phi.reserve(nodes.size() + neg.size());
  data.beta.reserve(nodes.size() + neg.size());
  data.G.reserve(nodes.size() + neg.size());
  auto push = [&](const std::array<double, 4>& n) {
    double c = std::cos(n[1]);
    double P = par.P(c);
    double pp = -std::sqrt(P);
    Vec3 d2 = second(n[1]);
    data.phi.push_back(n[0], n[1], pp, d2[0]);
    data.beta.push_back(n[0], n[2], par.C * c * c, d2[1]);
    data.G.push_back(n[0], n[3], (par.C * par.C * c * c - par.cos2t) / (alpha - pp),
                     d2[2]);
  };
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) push(*it);
  for (const auto& n : nodes) push(n);

  // phi is strictly decreasing (P > 0); the half period is phi = -pi.
  auto phi_at = [&data](double u) { return data.phi.eval(u); };
  auto find_crossing = [&](double target) {
    for (std::size_t i = 0; i + 1 < data.phi.size(); ++i) {
      double a = data.phi.node_value(i) - target;
      double b = data.phi.node_value(i + 1) - target;
      if (a == 0.0) return data.phi.node(i);
      if (std::signbit(a) != std::signbit(b)) {
        return bisect([&](double u) { return phi_at(u) - target; }, data.phi.node(i),
                      data.phi.node(i + 1), 1e-15);
      }
    }
    throw Error(ErrorKind::PeriodNotFound,
                "phi never reaches the target phase; period detection failed");
  };
  data.U = find_crossing(-kPi);
  double two_u = find_crossing(-2.0 * kPi);
  if (std::abs(two_u - 2.0 * data.U) > 1e-8 * (1.0 + two_u)) {
    throw Error(ErrorKind::PeriodNotFound, "phi is not periodic after 2U");
  }
  data.deck_shift = data.beta.eval(2.0 * data.U) / alpha;
  data.closure_residual = std::abs(par.C * data.beta.eval(2.0 * data.U) +
                                   alpha * data.G.eval(2.0 * data.U));
  return data;
}

// Immersion in y-coordinates and its partial derivatives.
struct DHPointEval {
  Vec3 y;       // (F1, F2, h)
  Vec3 yu, yv;  // partials
};

DHPointEval dh_eval_raw(const DHCatenoidData& d, double u, double v) {
  double alpha = d.alpha, C = d.C, cos2t = d.cos2theta();
  double phi = d.phi.eval(u);
  double beta = d.beta.eval(u);
  double G = d.G.eval(u);
  double c = std::cos(phi), s = std::sin(phi);
  double pp = d.phi.eval_d1(u);
  double bp = C * c * c;
  double Gp = (C * C * c * c - cos2t) / (alpha - pp);
  // G'' from the same analytic chain as the table nodes.
  DHParams par{alpha, C, cos2t};
  double ppp = -par.Pp(c) * s / 2.0;
  double gnum_u = -2.0 * C * C * c * s * pp;
  double Gpp = (gnum_u * (alpha - pp) + (C * C * c * c - cos2t) * ppp) /
               ((alpha - pp) * (alpha - pp));

  double A = alpha * v + beta;
  double shA = std::sinh(A), chA = std::cosh(A);

  double F1 = (Gp / alpha) * c * shA - (C / alpha) * s * chA;
  double F2 = C * v - G;
  double h = (C / alpha) * (Gp / alpha - 1.0) * c * chA -
             (1.0 / alpha) * (C * C / alpha + Gp) * s * shA;

  double F1_u = (Gpp / alpha) * c * shA - (Gp / alpha) * s * pp * shA +
                (Gp / alpha) * c * chA * bp - (C / alpha) * c * pp * chA -
                (C / alpha) * s * shA * bp;
  double F1_v = Gp * c * chA - C * s * shA;
  double F2_u = -Gp;
  double F2_v = C;
  double h_u = (C / alpha) * ((Gpp / alpha) * c * chA +
                              (Gp / alpha - 1.0) * (-s * pp * chA + c * shA * bp)) -
               (1.0 / alpha) * (Gpp * s * shA +
                                (C * C / alpha + Gp) * (c * pp * shA + s * chA * bp));
  double h_v = C * (Gp / alpha - 1.0) * c * shA - (C * C / alpha + Gp) * s * chA;

  DHPointEval out;
  out.y = {F1, F2, h};
  out.yu = {F1_u, F2_u, h_u};
  out.yv = {F1_v, F2_v, h_v};
  return out;
}

// Conversion to the standard Nil3 chart: x3 = y3 - y1 y2 / 2.
Point dh_to_x(const Vec3& y) { return {y[0], y[1], y[2] - 0.5 * y[0] * y[1]}; }

Vec3 dh_to_x_partial(const Vec3& y, const Vec3& dy) {
  return {dy[0], dy[1], dy[2] - 0.5 * (dy[0] * y[1] + y[0] * dy[1])};
}

}  // namespace

Cycle HorizontalCatenoid::cycle(double level, int n) const {
  auto d = data;
  double U = d->U;
  double C = d->C;
  double shear = d->deck_shift / (2.0 * U);
  Cycle c;
  c.curve = [d, U, C, shear, level](double s) -> Vec2 {
    double u = 2.0 * U * s;
    double v_raw = (level + d->G.eval(u)) / C;
    return {u, v_raw + shear * u};
  };
  c.derivative = [d, U, C, shear, level](double s) -> Vec2 {
    double u = 2.0 * U * s;
    double du = 2.0 * U;
    double dv = d->G.eval_d1(u) * du / C + shear * du;
    return {du, dv};
  };
  c.samples = n;
  c.id = "y2=" + std::to_string(level);
  return c;
}

HorizontalCatenoid nil_horizontal_catenoid(double alpha, double tol) {
  auto data = std::make_shared<const DHCatenoidData>(build_dh_data(alpha, tol));
  SurfacePatch patch;
  patch.space = AmbientSpace::nil3();
  double U = data->U;
  double shear = data->deck_shift / (2.0 * U);
  patch.chart = [data, shear](double u, double v) -> Point {
    DHPointEval e = dh_eval_raw(*data, u, v - shear * u);
    return dh_to_x(e.y);
  };
  patch.partials = [data, shear](double u, double v) -> std::pair<Vec3, Vec3> {
    DHPointEval e = dh_eval_raw(*data, u, v - shear * u);
    Vec3 raw_u = e.yu - shear * e.yv;
    return {dh_to_x_partial(e.y, raw_u), dh_to_x_partial(e.y, e.yv)};
  };
  patch.u_min = 0.0;
  patch.u_max = 2.0 * U;
  patch.periodic_u = true;
  patch.period_u = 2.0 * U;
  patch.v_min = -4.0;
  patch.v_max = 4.0;
  patch.name = "nil3 horizontal catenoid alpha=" + std::to_string(alpha);
  validate_immersion(patch);
  return HorizontalCatenoid{data, patch};
}

double dh_sigma2_closed_form(const DHCatenoidData& data) {
  return data.cos2theta() / (data.alpha * data.C) * data.G.eval(data.U) -
         2.0 * data.C * data.U;
}

double dh_sigma2_integral(const DHCatenoidData& data, int n) {
  double twoU = 2.0 * data.U;
  auto integrand = [&data](double s) {
    double u = 2.0 * data.U * s;
    double c = std::cos(data.phi.eval(u));
    double gp = data.G_prime(u);
    return (data.C * data.C + gp * gp) * (gp * c * c - 2.0 * data.alpha);
  };
  return twoU * trapezoid_periodic(integrand, n) / (2.0 * data.alpha * data.C);
}

// ------------------------------ H^2 x R ends -----------------------------

namespace {

double h2r_chi(double r) { return 2.0 * std::log((1.0 + r) / (1.0 - r)); }
double h2r_chi_d1(double r) { return 4.0 / (1.0 - r * r); }
double h2r_chi_d2(double r) {
  double d = 1.0 - r * r;
  return 8.0 * r / (d * d);
}

double h2r_psi(double beta, double t) {
  return (std::cosh(t) - beta) /
         std::sqrt(2.0 * beta * std::cosh(t) - 1.0 - beta * beta);
}

double h2r_psi_d1(double beta, double t) {
  double D = 2.0 * beta * std::cosh(t) - 1.0 - beta * beta;
  return std::sinh(t) * (beta * std::cosh(t) - 1.0) / std::pow(D, 1.5);
}

double h2r_min_radius(double beta) {
  double s = std::sqrt(beta);
  return std::abs((s - 1.0) / (s + 1.0));
}

}  // namespace

double h2r_integral(double beta, double r, double tol) {
  double t0 = std::abs(std::log(beta));
  double L = h2r_chi(r);
  if (L <= t0) {
    throw Error(ErrorKind::PointOutsideDomain,
                "radius below the waist of the rotational end");
  }
  if (beta == 1.0) {
    return adaptive_simpson([beta](double t) { return h2r_psi(beta, t); }, 0.0, L, tol);
  }
  // Inverse square-root endpoint removed by t = t0 + s^2. With
  // cosh(t0) = (1 + beta^2) / (2 beta) the weight factors exactly:
  //   2 beta (cosh t - cosh t0) = 4 beta sinh(t0 + s^2/2) sinh(s^2/2),
  // and sinh(s^2/2) / (s^2/2) stays regular at s = 0.
  double smax = std::sqrt(L - t0);
  auto integrand = [beta, t0](double s) {
    double x = 0.5 * s * s;
    double q = (x == 0.0) ? 1.0 : std::sinh(x) / x;
    double t = t0 + s * s;
    return (std::cosh(t) - beta) /
           std::sqrt(beta * std::sinh(t0 + x) * q);
  };
  return adaptive_simpson(integrand, 0.0, smax, tol);
}

double RotationalEndData::h_value(double r) const {
  if (closed_form) return 2.0 * (1.0 + r * r) / (1.0 - r * r);
  return h.eval(r);
}

double RotationalEndData::h_d1(double r) const {
  if (closed_form) {
    double d = 1.0 - r * r;
    return 8.0 * r / (d * d);
  }
  return h.eval_d1(r);
}

double RotationalEndData::h_d2(double r) const {
  if (closed_form) {
    double d = 1.0 - r * r;
    return (8.0 + 24.0 * r * r) / (d * d * d);
  }
  return h.eval_d2(r);
}

RotationalEndData h2r_profile(double beta, double tol, double r_lo, double r_hi) {
  if (beta <= 0.0) {
    throw Error(ErrorKind::ConfigError, "rotational end requires beta > 0");
  }
  if (!(r_lo < r_hi && r_hi < 1.0)) {
    throw Error(ErrorKind::ConfigError, "need r_lo < r_hi < 1");
  }
  RotationalEndData data;
  data.beta = beta;
  data.r_lo = r_lo;
  data.r_hi = r_hi;
  if (beta == 1.0) {
    data.closed_form = true;
    return data;
  }
  double rmin = h2r_min_radius(beta);
  double lo = r_lo - 0.02;
  if (lo <= rmin + 0.01) {
    throw Error(ErrorKind::ConfigError,
                "r_lo too close to the waist radius " + std::to_string(rmin));
  }
  double hi = std::min(0.985, r_hi + 0.02);
  double h0 = h2r_integral(beta, lo, tol);

  using RK = RungeKutta54<1>;
  auto rhs = [beta](double r, const RK::State&) -> RK::State {
    return RK::State(h2r_psi(beta, h2r_chi(r)) * h2r_chi_d1(r));
  };
  OdeOptions opt;
  opt.rtol = 1e-13;
  opt.atol = 1e-13;
  data.h.reserve(4000);
  RK::integrate_grid(rhs, uniform_grid(lo, hi, 2e-4), RK::State(h0), opt,
                     [&](double r, const RK::State& y) {
                       double L = h2r_chi(r);
                       double d1 = h2r_psi(beta, L) * h2r_chi_d1(r);
                       double d2 = h2r_psi_d1(beta, L) * h2r_chi_d1(r) * h2r_chi_d1(r) +
                                   h2r_psi(beta, L) * h2r_chi_d2(r);
                       data.h.push_back(r, y[0], d1, d2);
                     });
  return data;
}

Cycle RotationalEnd::cycle(double r, int n) const {
  Cycle c;
  c.curve = [r](double s) { return Vec2(r, 2.0 * kPi * s); };
  c.derivative = [](double) { return Vec2(0.0, 2.0 * kPi); };
  c.samples = n;
  c.id = "r=" + std::to_string(r);
  return c;
}

RotationalEnd h2r_rotational_end(double beta, double tol, double r_lo, double r_hi) {
  auto data =
      std::make_shared<const RotationalEndData>(h2r_profile(beta, tol, r_lo, r_hi));
  SurfacePatch patch;
  patch.space = AmbientSpace::h2xr();
  patch.chart = [data](double u, double v) -> Point {
    double rho = 4.0 * u / (1.0 + u * u);
    return {rho * std::cos(v), rho * std::sin(v), data->h_value(u)};
  };
  patch.partials = [data](double u, double v) -> std::pair<Vec3, Vec3> {
    double den = 1.0 + u * u;
    double rho = 4.0 * u / den;
    double rho_p = 4.0 * (1.0 - u * u) / (den * den);
    double c = std::cos(v), s = std::sin(v);
    return {Vec3(rho_p * c, rho_p * s, data->h_d1(u)), Vec3(-rho * s, rho * c, 0.0)};
  };
  patch.u_min = r_lo;
  patch.u_max = r_hi;
  patch.v_min = 0.0;
  patch.v_max = 2.0 * kPi;
  patch.periodic_v = true;
  patch.period_v = 2.0 * kPi;
  patch.name = "h2xr rotational end beta=" + std::to_string(beta);
  validate_immersion(patch);
  return RotationalEnd{data, patch};
}

// ------------------------------ Sol3 plane -------------------------------

SurfacePatch sol3_horizontal_plane() {
  SurfacePatch patch;
  patch.space = AmbientSpace::sol3();
  patch.chart = [](double u, double v) -> Point { return {u, v, 0.0}; };
  patch.partials = [](double, double) -> std::pair<Vec3, Vec3> {
    return {Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.0)};
  };
  patch.u_min = -6.0;
  patch.u_max = 6.0;
  patch.v_min = -6.0;
  patch.v_max = 6.0;
  patch.name = "sol3 horizontal plane";
  return patch;
}

Cycle circle_cycle(const Vec2& center, double radius, int n, const std::string& id) {
  Cycle c;
  c.curve = [center, radius](double s) -> Vec2 {
    return {center[0] + radius * std::cos(2.0 * kPi * s),
            center[1] + radius * std::sin(2.0 * kPi * s)};
  };
  c.derivative = [radius](double s) -> Vec2 {
    return {-2.0 * kPi * radius * std::sin(2.0 * kPi * s),
            2.0 * kPi * radius * std::cos(2.0 * kPi * s)};
  };
  c.samples = n;
  c.id = id;
  return c;
}

// ------------------------------ CSV exports ------------------------------

std::string catenoid_csv(const CatenoidProfile& profile, int rows) {
  std::string out = "t,f,f_t\n";
  for (int i = 0; i < rows; ++i) {
    double t = profile.T * i / double(rows - 1);
    out += format_row({t, profile.value(t), profile.deriv(t)});
  }
  return out;
}

std::string dh_csv(const DHCatenoidData& data, int rows) {
  std::string out = "u,phi,beta,G\n";
  for (int i = 0; i < rows; ++i) {
    double u = 2.0 * data.U * i / double(rows - 1);
    out += format_row({u, data.phi.eval(u), data.beta.eval(u), data.G.eval(u)});
  }
  return out;
}

std::string h2r_csv(const RotationalEndData& data, int rows) {
  std::string out = "r,h\n";
  for (int i = 0; i < rows; ++i) {
    double r = data.r_lo + (data.r_hi - data.r_lo) * i / double(rows - 1);
    out += format_row({r, data.h_value(r)});
  }
  return out;
}

}  // namespace nflux
