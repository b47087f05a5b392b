#include <doctest.h>

#include <numbers>

#include "nflux/fields.hpp"
#include "nflux/verify.hpp"

using namespace nflux;

TEST_SUITE_BEGIN("fields");

TEST_CASE("killing fields: frozen values") {
  AmbientSpace nil = AmbientSpace::nil3();
  // S3 = d3 everywhere in E3(kappa, tau)
  CHECK((killing_field(nil, SymmetryId::Translation3, {0.4, 0.2, -0.9}).comps -
         Vec3(0, 0, 1))
            .norm() < 1e-15);
  // S_R at (1, 0, x3) is d2
  CHECK((killing_field(nil, SymmetryId::Rotation, {1.0, 0.0, 0.7}).comps -
         Vec3(0, 1, 0))
            .norm() < 1e-15);
  // Sol3: S3 = -x1 d1 + x2 d2 + d3
  CHECK((killing_field(AmbientSpace::sol3(), SymmetryId::Translation3, {1, 2, 0}).comps -
         Vec3(-1, 2, 1))
            .norm() < 1e-15);
}

TEST_CASE("rotation is invalid in Sol3") {
  AmbientSpace sol = AmbientSpace::sol3();
  CHECK_THROWS_AS(killing_field(sol, SymmetryId::Rotation, {0, 0, 0}), Error);
  CHECK_THROWS_AS(potential_vector(sol, SymmetryId::Rotation, {0, 0, 0}), Error);
  CHECK_THROWS_AS(isometry_apply(sol, SymmetryId::Rotation, 0.3, {0, 0, 0}), Error);
  CHECK(symmetries_of(sol).size() == 3);
  CHECK(symmetries_of(AmbientSpace::nil3()).size() == 4);
}

TEST_CASE("potential vectors: frozen values") {
  // Nil3: F3 = -(1/(2 tau)) E3 = -E3
  TangentVector f3 = potential_vector(AmbientSpace::nil3(), SymmetryId::Translation3,
                                      {0.3, -0.2, 0.5});
  CHECK(f3.basis == Basis::Frame);
  CHECK((f3.comps - Vec3(0, 0, -1)).norm() < 1e-15);
  // Sol3: F2 = -x1 E3
  TangentVector f2 =
      potential_vector(AmbientSpace::sol3(), SymmetryId::Translation2, {0.7, 0.1, -0.4});
  CHECK((f2.comps - Vec3(0, 0, -0.7)).norm() < 1e-15);
}

TEST_CASE("curl F = S for every space, symmetry, and branch") {
  for (const AmbientSpace& space : default_spaces()) {
    Sampler rng(101);
    for (SymmetryId id : symmetries_of(space)) {
      FrameField f = frame_components_field(space, potential_field_of(space, id));
      for (int i = 0; i < 50; ++i) {
        Point p = rng.point_in(space);
        Vec3 got = curl_frame(space, f, p).comps;
        Vec3 want = to_frame(space, killing_field(space, id, p)).comps;
        CHECK((got - want).cwiseAbs().maxCoeff() < 1e-5);
      }
    }
  }
}

TEST_CASE("volume field") {
  CHECK(volume_field(AmbientSpace::nil3(), {0.5, -0.5, 0.0}).comps.norm() < 1e-15);
  TangentVector xi = volume_field(AmbientSpace::sol3(), {0.0, 0.0, 2.0});
  CHECK((to_coordinate(AmbientSpace::sol3(), xi).comps - Vec3(0, 0, 2)).norm() < 1e-15);
}

TEST_CASE("isometries: frozen images") {
  AmbientSpace nil = AmbientSpace::nil3();
  Point p = isometry_apply(nil, SymmetryId::Translation3, 1.5, {0, 0, 0});
  CHECK((p - Point{0, 0, 1.5}).norm() < 1e-15);

  Point q = isometry_apply(nil, SymmetryId::Rotation, std::numbers::pi / 2, {1, 0, 0});
  CHECK((q - Point{0, 1, 0}).norm() < 1e-14);

  Point r = isometry_apply(AmbientSpace::sol3(), SymmetryId::Translation3, 1.0,
                           {1.0, 1.0, 0.0});
  CHECK((r - Point{std::exp(-1.0), std::exp(1.0), 1.0}).norm() < 1e-14);
}

TEST_CASE("group law") {
  std::vector<Point> pts = {{0.25, -0.5, 0.75}, {0.5, 0.25, -0.25}, {0.0, 0.125, 0.5}};
  // S3 with dyadic parameters composes exactly.
  CHECK(group_law_check(AmbientSpace::nil3(), SymmetryId::Translation3, 0.25, 0.5,
                        pts) == 0.0);
  // Rotations compose to round-off.
  CHECK(group_law_check(AmbientSpace::nil3(), SymmetryId::Rotation, 0.4, 0.3, pts) <
        1e-12);
  // The Moebius-type horizontal translations, reparametrized as flows.
  CHECK(group_law_check(AmbientSpace::h2xr(), SymmetryId::Translation1, 0.3, 0.3, pts) <
        1e-9);
  for (const AmbientSpace& space : default_spaces()) {
    for (SymmetryId id : symmetries_of(space)) {
      CHECK(group_law_check(space, id, 0.37, -0.41, pts) < 1e-9);
    }
  }
}

TEST_CASE("flow consistency: the generator is the t-derivative at 0") {
  for (const AmbientSpace& space : default_spaces()) {
    CheckResult r = check_flow_consistency(space, 107, 25);
    CHECK(r.max_error < 1e-7);
  }
}

TEST_CASE("isometries preserve the metric") {
  for (const AmbientSpace& space : default_spaces()) {
    CheckResult r = check_isometry_metric_preservation(space, 109, 25);
    CHECK(r.max_error < 1e-9);
  }
}

TEST_CASE("isometry differential: frozen cases") {
  AmbientSpace sol = AmbientSpace::sol3();
  Point p{0.3, -0.6, 0.2};
  TangentVector d1 = coordinate_vector(p, {1, 0, 0});
  double t = 0.8;
  TangentVector img = isometry_differential(sol, SymmetryId::Translation3, t, p, d1);
  CHECK((img.comps - Vec3(std::exp(-t), 0, 0)).norm() < 1e-9);

  // E3 vertical translation has the identity differential.
  AmbientSpace nil = AmbientSpace::nil3();
  TangentVector v = coordinate_vector(p, {0.3, 0.7, -0.2});
  TangentVector w = isometry_differential(nil, SymmetryId::Translation3, 1.2, p, v);
  CHECK((w.comps - v.comps).norm() < 1e-9);
}

TEST_CASE("isometry differential preserves norms") {
  for (const AmbientSpace& space : default_spaces()) {
    Sampler rng(113);
    for (SymmetryId id : symmetries_of(space)) {
      for (int i = 0; i < 10; ++i) {
        Point p = rng.point_in(space);
        double t = rng.uniform(-1.0, 1.0);
        TangentVector v = coordinate_vector(p, rng.box(1.0));
        TangentVector w = isometry_differential(space, id, t, p, v);
        CHECK(std::abs(norm(space, w) - norm(space, v)) < 1e-6);
      }
    }
  }
}

TEST_CASE("Killing property: symmetrized covariant derivative vanishes") {
  for (const AmbientSpace& space : default_spaces()) {
    CheckResult r = check_killing_defect(space, 127, 50);
    CHECK(r.max_error < 1e-5);
  }
}

TEST_SUITE_END();
