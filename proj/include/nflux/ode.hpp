#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "nflux/errors.hpp"

namespace nflux {

struct OdeOptions {
  double rtol = 1e-12;
  double atol = 1e-12;
  double max_step = std::numeric_limits<double>::infinity();
  long max_steps = 50'000'000;
};

// Adaptive Dormand-Prince 5(4) embedded pair.
template <int N>
class RungeKutta54 {
 public:
  using State = Eigen::Matrix<double, N, 1>;
  using Rhs = std::function<State(double, const State&)>;

  // Integrates from (t0, y0) to t1 (either direction), returning y(t1).
  static State integrate(const Rhs& rhs, double t0, const State& y0, double t1,
                         const OdeOptions& opt = {}) {
    State y = y0;
    step_to(rhs, t0, y, t1, opt);
    return y;
  }

  // Integrates across an ascending or descending grid of output times,
  // invoking visit(t, y) at every grid node including the first.
  static void integrate_grid(const Rhs& rhs, const std::vector<double>& ts,
                             const State& y0, const OdeOptions& opt,
                             const std::function<void(double, const State&)>& visit) {
    if (ts.empty()) return;
    State y = y0;
    visit(ts.front(), y);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      step_to(rhs, ts[i], y, ts[i + 1], opt);
      visit(ts[i + 1], y);
    }
  }

 private:
  static void step_to(const Rhs& rhs, double t0, State& y, double t1,
                      const OdeOptions& opt) {
    double dir = (t1 >= t0) ? 1.0 : -1.0;
    double span = std::abs(t1 - t0);
    if (span == 0.0) return;
    double t = t0;
    double h = dir * std::min({span, opt.max_step, 0.1 * span + 1e-3});
    long steps = 0;
    while (dir * (t1 - t) > 0.0) {
      if (++steps > opt.max_steps) {
        throw Error(ErrorKind::SolverFailure, "ODE solver exceeded max step count");
      }
      if (dir * (t + h - t1) > 0.0) h = t1 - t;
      State ynew, err;
      dp54_step(rhs, t, y, h, ynew, err);
      double scale = 0.0;
      for (int i = 0; i < y.size(); ++i) {
        double tol = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
        scale = std::max(scale, std::abs(err[i]) / tol);
      }
      if (scale <= 1.0) {
        t += h;
        y = ynew;
        double grow = (scale > 0.0) ? 0.9 * std::pow(scale, -0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
      } else {
        h *= std::max(0.2, 0.9 * std::pow(scale, -0.2));
      }
      if (std::abs(h) > opt.max_step) h = dir * opt.max_step;
      if (std::abs(h) < 1e-15 * (1.0 + std::abs(t))) {
        throw Error(ErrorKind::SolverFailure, "ODE step size underflow");
      }
    }
  }

  static void dp54_step(const Rhs& rhs, double t, const State& y, double h,
                        State& y5, State& err) {
    const State k1 = rhs(t, y);
    const State k2 = rhs(t + h / 5.0, y + h * (k1 / 5.0));
    const State k3 = rhs(t + 3.0 * h / 10.0, y + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
    const State k4 = rhs(t + 4.0 * h / 5.0,
                         y + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
    const State k5 =
        rhs(t + 8.0 * h / 9.0,
            y + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                     64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
    const State k6 = rhs(t + h, y + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                                         46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                                         5103.0 / 18656.0 * k5));
    y5 = y + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                  2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
    const State k7 = rhs(t + h, y5);
    const State y4 = y + h * (5179.0 / 57600.0 * k1 + 7571.0 / 16695.0 * k3 +
                              393.0 / 640.0 * k4 - 92097.0 / 339200.0 * k5 +
                              187.0 / 2100.0 * k6 + k7 / 40.0);
    err = y5 - y4;
  }
};

// Quintic Hermite interpolation table: each node stores the value and its
// first and second derivatives, so the interpolant is C^2 and accurate to
// O(h^6) between nodes.
class HermiteTable {
 public:
  void reserve(std::size_t n) {
    xs_.reserve(n);
    v_.reserve(n);
    d1_.reserve(n);
    d2_.reserve(n);
  }

  void push_back(double x, double value, double d1, double d2) {
    xs_.push_back(x);
    v_.push_back(value);
    d1_.push_back(d1);
    d2_.push_back(d2);
  }

  bool empty() const { return xs_.empty(); }
  double x_min() const { return xs_.front(); }
  double x_max() const { return xs_.back(); }
  std::size_t size() const { return xs_.size(); }
  double node(std::size_t i) const { return xs_[i]; }
  double node_value(std::size_t i) const { return v_[i]; }
  double node_d1(std::size_t i) const { return d1_[i]; }

  double eval(double x) const { return piece(x, 0); }
  double eval_d1(double x) const { return piece(x, 1); }
  double eval_d2(double x) const { return piece(x, 2); }

 private:
  double piece(double x, int deriv) const {
    if (xs_.size() < 2 || x < xs_.front() - 1e-12 || x > xs_.back() + 1e-12) {
      throw Error(ErrorKind::ParamOutsideDomain,
                  "evaluation outside the tabulated range");
    }
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = std::min<std::size_t>(
        xs_.size() - 2, (it == xs_.begin()) ? 0 : std::size_t(it - xs_.begin() - 1));
    double h = xs_[i + 1] - xs_[i];
    double s = (x - xs_[i]) / h;
    double b[6];
    basis(s, deriv, b);
    double scale = std::pow(h, -deriv);
    return scale * (v_[i] * b[0] + h * d1_[i] * b[1] + h * h * d2_[i] * b[2] +
                    v_[i + 1] * b[3] + h * d1_[i + 1] * b[4] + h * h * d2_[i + 1] * b[5]);
  }

  static void basis(double s, int deriv, double out[6]) {
    double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    switch (deriv) {
      case 0:
        out[0] = 1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5;
        out[1] = s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5;
        out[2] = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
        out[3] = 10.0 * s3 - 15.0 * s4 + 6.0 * s5;
        out[4] = -4.0 * s3 + 7.0 * s4 - 3.0 * s5;
        out[5] = 0.5 * s3 - s4 + 0.5 * s5;
        break;
      case 1:
        out[0] = -30.0 * s2 + 60.0 * s3 - 30.0 * s4;
        out[1] = 1.0 - 18.0 * s2 + 32.0 * s3 - 15.0 * s4;
        out[2] = s - 4.5 * s2 + 6.0 * s3 - 2.5 * s4;
        out[3] = 30.0 * s2 - 60.0 * s3 + 30.0 * s4;
        out[4] = -12.0 * s2 + 28.0 * s3 - 15.0 * s4;
        out[5] = 1.5 * s2 - 4.0 * s3 + 2.5 * s4;
        break;
      default:
        out[0] = -60.0 * s + 180.0 * s2 - 120.0 * s3;
        out[1] = -36.0 * s + 96.0 * s2 - 60.0 * s3;
        out[2] = 1.0 - 9.0 * s + 18.0 * s2 - 10.0 * s3;
        out[3] = 60.0 * s - 180.0 * s2 + 120.0 * s3;
        out[4] = -24.0 * s + 84.0 * s2 - 60.0 * s3;
        out[5] = 3.0 * s - 12.0 * s2 + 10.0 * s3;
        break;
    }
  }

  std::vector<double> xs_, v_, d1_, d2_;
};

}  // namespace nflux
