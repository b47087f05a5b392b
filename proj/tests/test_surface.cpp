#include <doctest.h>

#include <numbers>

#include "nflux/families.hpp"
#include "nflux/surface.hpp"
#include "nflux/verify.hpp"

using namespace nflux;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("surface");

TEST_CASE("differential basics") {
  SurfacePatch plane = sol3_horizontal_plane();
  TangentVector fu = differential(plane, 0.3, -0.2, {1.0, 0.0});
  CHECK((fu.comps - Vec3(1, 0, 0)).norm() < 1e-15);
  TangentVector zero = differential(plane, 0.3, -0.2, {0.0, 0.0});
  CHECK(zero.comps.norm() == 0.0);
}

TEST_CASE("differential of the vertical catenoid in theta") {
  VerticalCatenoid cat = nil_vertical_catenoid(1.0, 2.0);
  double t = 0.6, th = 1.1;
  double f = cat.profile->value(t);
  TangentVector dth = differential(cat.patch, t, th, {0.0, 1.0});
  Vec3 want = f * Vec3(-std::sin(th), std::cos(th), 0.0);
  CHECK((dth.comps - want).norm() < 1e-12);
}

TEST_CASE("unit normal of the Sol3 plane is E3") {
  SurfacePatch plane = sol3_horizontal_plane();
  TangentVector n = unit_normal(plane, 0.7, -0.4);
  CHECK((to_coordinate(plane.space, n).comps - Vec3(0, 0, 1)).norm() < 1e-12);
}

TEST_CASE("unit normal has unit length and is orthogonal to the surface") {
  VerticalCatenoid cat = nil_vertical_catenoid(0.8, 1.5);
  Sampler rng(211);
  for (int i = 0; i < 25; ++i) {
    double u = rng.uniform(-1.4, 1.4);
    double v = rng.uniform(0.0, 2.0 * kPi);
    TangentVector n = unit_normal(cat.patch, u, v);
    CHECK(std::abs(norm(cat.patch.space, n) - 1.0) < 1e-10);
    Vec2 w(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    TangentVector df = differential(cat.patch, u, v, w);
    CHECK(std::abs(inner(cat.patch.space, n, df)) < 1e-10 * (1.0 + df.comps.norm()));
  }
}

TEST_CASE("catenoid neck normal is horizontal and radial") {
  VerticalCatenoid cat = nil_vertical_catenoid(1.0, 1.0);
  double th = 0.8;
  TangentVector n = unit_normal(cat.patch, 0.0, th);
  Vec3 f = n.comps;  // frame components
  // f_t(0) = 0: the normal at the neck lies in the horizontal plane,
  // pointing inward along (-cos, -sin).
  CHECK(std::abs(f[2]) < 1e-10);
  CHECK(f[0] == doctest::Approx(-std::cos(th)).epsilon(1e-9));
  CHECK(f[1] == doctest::Approx(-std::sin(th)).epsilon(1e-9));
}

TEST_CASE("star operator: quarter turn identities") {
  RotationalEnd end = h2r_rotational_end(0.5);
  Sampler rng(223);
  const SurfacePatch& s = end.patch;
  for (int i = 0; i < 20; ++i) {
    double u = rng.uniform(s.u_min, s.u_max);
    double v = rng.uniform(0.0, 2.0 * kPi);
    Vec2 w(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    TangentVector df = differential(s, u, v, w);
    TangentVector sdf = star_df(s, u, v, w);
    CHECK(std::abs(inner(s.space, sdf, df)) < 1e-10 * (1.0 + df.comps.norm()));
    CHECK(std::abs(norm(s.space, sdf) - norm(s.space, df)) < 1e-10);
    // *df(*df(w)) = -df(w): rotate w's image once more.
    TangentVector n = unit_normal(s, u, v);
    TangentVector twice = cross(s.space, sdf, n);
    CHECK((twice.comps + to_frame(s.space, df).comps).norm() <
          1e-9 * (1.0 + df.comps.norm()));
  }
}

TEST_CASE("mean curvature: Sol3 plane is minimal") {
  SurfacePatch plane = sol3_horizontal_plane();
  for (double u : {-0.8, 0.0, 1.2}) {
    for (double v : {-0.5, 0.4}) {
      CHECK(std::abs(mean_curvature(plane, u, v)) < 1e-6);
    }
  }
}

TEST_CASE("mean curvature: vertical catenoid is minimal") {
  VerticalCatenoid cat = nil_vertical_catenoid(1.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      double u = -1.8 + 3.6 * i / 8.0;
      double v = 2.0 * kPi * j / 9.0;
      worst = std::max(worst, std::abs(mean_curvature(cat.patch, u, v)));
    }
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("mean curvature: rotational end has H = 1/2") {
  RotationalEnd end = h2r_rotational_end(0.5);
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      double u = 0.6 + 0.3 * i / 7.0;
      double v = 2.0 * kPi * j / 8.0;
      worst = std::max(worst, std::abs(mean_curvature(end.patch, u, v) - 0.5));
    }
  }
  CHECK(worst < 1e-4);
}

TEST_CASE("pushforward: t = 0 is the identity") {
  VerticalCatenoid cat = nil_vertical_catenoid(1.0, 1.5);
  SurfacePatch same =
      pushforward_surface(cat.patch, {cat.patch.space, SymmetryId::Translation1, 0.0});
  Sampler rng(227);
  for (int i = 0; i < 10; ++i) {
    double u = rng.uniform(-1.0, 1.0), v = rng.uniform(0.0, 2.0 * kPi);
    CHECK((same.chart(u, v) - cat.patch.chart(u, v)).norm() < 1e-12);
  }
}

TEST_CASE("pushforward preserves mean curvature and the area element") {
  VerticalCatenoid cat = nil_vertical_catenoid(1.0, 1.5);
  const AmbientSpace& space = cat.patch.space;
  for (SymmetryId id :
       {SymmetryId::Translation1, SymmetryId::Translation2, SymmetryId::Rotation}) {
    SurfacePatch moved = pushforward_surface(cat.patch, {space, id, 0.7});
    Sampler rng(229);
    for (int i = 0; i < 6; ++i) {
      double u = rng.uniform(-1.0, 1.0), v = rng.uniform(0.0, 2.0 * kPi);
      CHECK(std::abs(mean_curvature(moved, u, v) - mean_curvature(cat.patch, u, v)) <
            1e-5);
      Point p0 = cat.patch.chart(u, v);
      Point p1 = moved.chart(u, v);
      auto [fu0, fv0] = surface_partials(cat.patch, u, v);
      auto [fu1, fv1] = surface_partials(moved, u, v);
      double a0 = cross(space, coordinate_vector(p0, fu0), coordinate_vector(p0, fv0))
                      .comps.norm();
      double a1 = cross(space, coordinate_vector(p1, fu1), coordinate_vector(p1, fv1))
                      .comps.norm();
      CHECK(std::abs(a0 - a1) < 1e-8 * (1.0 + a0));
    }
  }
}

TEST_CASE("periodicity and immersion validation") {
  VerticalCatenoid cat = nil_vertical_catenoid(1.0, 1.5);
  CHECK(periodicity_defect(cat.patch) < 1e-9);
  CHECK(immersion_defect(cat.patch) > 1e-10);

  SurfacePatch degenerate = sol3_horizontal_plane();
  degenerate.chart = [](double u, double) -> Point { return {u, 0.0, 0.0}; };
  degenerate.partials = nullptr;
  CHECK_THROWS_AS(validate_immersion(degenerate), Error);
}

TEST_SUITE_END();
