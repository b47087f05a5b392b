#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nflux/ode.hpp"
#include "nflux/quadrature.hpp"
#include "nflux/rootfind.hpp"

using namespace nflux;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("RK54 integrates y' = y") {
  using RK = RungeKutta54<1>;
  auto rhs = [](double, const RK::State& y) { return y; };
  RK::State y = RK::integrate(rhs, 0.0, RK::State(1.0), 1.0);
  CHECK(y[0] == doctest::Approx(std::exp(1.0)).epsilon(1e-11));
}

TEST_CASE("RK54 integrates the harmonic oscillator both ways") {
  using RK = RungeKutta54<2>;
  auto rhs = [](double, const RK::State& y) { return RK::State(y[1], -y[0]); };
  double t1 = 2.0 * std::numbers::pi;
  RK::State fwd = RK::integrate(rhs, 0.0, RK::State(1.0, 0.0), t1);
  CHECK(fwd[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(fwd[1]) < 1e-9);
  RK::State bwd = RK::integrate(rhs, 0.0, RK::State(1.0, 0.0), -std::numbers::pi);
  CHECK(bwd[0] == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("RK54 grid output visits every node") {
  using RK = RungeKutta54<1>;
  auto rhs = [](double t, const RK::State&) { return RK::State(std::cos(t)); };
  std::vector<double> ts = {0.0, 0.25, 0.5, 0.75, 1.0};
  int count = 0;
  RK::integrate_grid(rhs, ts, RK::State(0.0), {}, [&](double t, const RK::State& y) {
    CHECK(y[0] == doctest::Approx(std::sin(t)).epsilon(1e-11));
    ++count;
  });
  CHECK(count == 5);
}

TEST_CASE("Hermite table reproduces a smooth function and derivatives") {
  HermiteTable table;
  for (int i = 0; i <= 200; ++i) {
    double x = -1.0 + 2.0 * i / 200.0;
    table.push_back(x, std::sin(3.0 * x), 3.0 * std::cos(3.0 * x),
                    -9.0 * std::sin(3.0 * x));
  }
  for (double x : {-0.987, -0.25, 0.123, 0.7775, 0.999}) {
    CHECK(table.eval(x) == doctest::Approx(std::sin(3.0 * x)).epsilon(1e-12));
    CHECK(table.eval_d1(x) == doctest::Approx(3.0 * std::cos(3.0 * x)).epsilon(1e-9));
    CHECK(table.eval_d2(x) == doctest::Approx(-9.0 * std::sin(3.0 * x)).epsilon(1e-6));
  }
  CHECK_THROWS_AS(table.eval(1.5), Error);
}

TEST_CASE("adaptive Simpson quadrature") {
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("periodic trapezoid is spectrally accurate") {
  auto f = [](double s) {
    double c = std::cos(2.0 * std::numbers::pi * s);
    return std::exp(c);  // smooth periodic; integral = I_0(1)
  };
  double v1 = trapezoid_periodic(f, 64);
  double v2 = trapezoid_periodic(f, 128);
  CHECK(std::abs(v1 - v2) < 1e-14);
  CHECK(v2 == doctest::Approx(1.2660658777520084).epsilon(1e-13));
}

TEST_CASE("bisection finds roots and reports missing brackets") {
  double root = bisect([](double x) { return std::cos(x); }, 0.0, 2.0);
  CHECK(root == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(bisect([](double x) { return 1.0 + x * x; }, 0.0, 1.0), Error);
}

TEST_SUITE_END();
