#include <doctest.h>

#include "nflux/geometry.hpp"
#include "nflux/fields.hpp"
#include "nflux/verify.hpp"

using namespace nflux;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("ambient space construction rejects kappa = 4 tau^2") {
  CHECK_THROWS_AS(AmbientSpace::e3(0.0, 0.0), Error);
  CHECK_THROWS_AS(AmbientSpace::e3(1.0, 0.5), Error);
  CHECK_NOTHROW(AmbientSpace::e3(1.0, 0.25));
  CHECK_NOTHROW(AmbientSpace::nil3());
}

TEST_CASE("lambda(0) = 1 for every kappa") {
  for (double kappa : {-2.0, -1.0, 0.0, 1.0, 3.0}) {
    AmbientSpace space = AmbientSpace::e3(kappa, 1.0);
    CHECK(space.lambda({0.0, 0.0, 0.7}) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("metric: Sol3 at the origin is the identity") {
  Mat3 g = metric_at(AmbientSpace::sol3(), {0.0, 0.0, 0.0});
  CHECK((g - Mat3::Identity()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("metric: E3(kappa, 0) at w = 0 is the identity") {
  Mat3 g = metric_at(AmbientSpace::h2xr(), {0.0, 0.0, 1.3});
  CHECK((g - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("metric: H2xR at w = 0.5 has g11 = g22 = 256/225") {
  // lambda = 1 / (1 - 0.25 * 0.25) = 16/15, computed by hand
  Mat3 g = metric_at(AmbientSpace::h2xr(), {0.5, 0.0, 0.0});
  CHECK(g(0, 0) == doctest::Approx(256.0 / 225.0).epsilon(1e-14));
  CHECK(g(1, 1) == doctest::Approx(256.0 / 225.0).epsilon(1e-14));
  CHECK(g(2, 2) == doctest::Approx(1.0));
  CHECK(std::abs(g(0, 1)) < 1e-15);
  CHECK(std::abs(g(0, 2)) < 1e-15);
  CHECK(std::abs(g(1, 2)) < 1e-15);
}

TEST_CASE("metric rejects points outside the disk for kappa < 0") {
  AmbientSpace space = AmbientSpace::h2xr();  // disk of radius 2
  CHECK_THROWS_AS(metric_at(space, {2.5, 0.0, 0.0}), Error);
  CHECK_NOTHROW(metric_at(space, {1.9, 0.0, 0.0}));
}

TEST_CASE("frame: Sol3 at x3 = 0 is the coordinate frame") {
  Mat3 F = frame_at(AmbientSpace::sol3(), {1.0, 2.0, 0.0});
  CHECK((F - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("frame: Nil3 formulas") {
  // sigma = 0, lambda = 1: E1 = d1 - (x2/2) d3, E2 = d2 + (x1/2) d3
  Point p{0.7, -1.1, 0.4};
  Mat3 F = frame_at(AmbientSpace::nil3(), p);
  CHECK(F(0, 0) == doctest::Approx(1.0));
  CHECK(F(2, 0) == doctest::Approx(-0.5 * p[1]).epsilon(1e-14));
  CHECK(F(1, 1) == doctest::Approx(1.0));
  CHECK(F(2, 1) == doctest::Approx(0.5 * p[0]).epsilon(1e-14));
  CHECK(F(2, 2) == doctest::Approx(1.0));
  CHECK(std::abs(F(1, 0)) < 1e-15);
  CHECK(std::abs(F(0, 1)) < 1e-15);
}

TEST_CASE("frame Gram matrix is the identity at random points") {
  for (const AmbientSpace& space : default_spaces()) {
    Sampler rng(7);
    for (int i = 0; i < 100; ++i) {
      Point p = rng.point_in(space);
      Mat3 F = frame_at(space, p);
      Mat3 gram = F.transpose() * metric_at(space, p) * F;
      CHECK((gram - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("inner: frame vectors are orthonormal") {
  AmbientSpace space = AmbientSpace::e3(-1.0, 0.7);
  Point p{0.3, -0.2, 0.9};
  TangentVector e1 = frame_vector(p, {1.0, 0.0, 0.0});
  TangentVector e2 = frame_vector(p, {0.0, 1.0, 0.0});
  CHECK(inner(space, e1, e1) == doctest::Approx(1.0));
  CHECK(inner(space, e1, e2) == doctest::Approx(0.0));
}

TEST_CASE("inner: Sol3 g11 at height 1 is e^2") {
  Point p{0.0, 0.0, 1.0};
  TangentVector d1 = coordinate_vector(p, {1.0, 0.0, 0.0});
  CHECK(inner(AmbientSpace::sol3(), d1, d1) ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-14));
}

TEST_CASE("inner rejects mismatched base points") {
  AmbientSpace space = AmbientSpace::sol3();
  TangentVector u = coordinate_vector({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
  TangentVector v = coordinate_vector({1.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
  CHECK_THROWS_AS(inner(space, u, v), Error);
}

TEST_CASE("cross: oriented frame identities") {
  for (const AmbientSpace& space : default_spaces()) {
    Point p = space.is_sol3() ? Point{0.4, -0.3, 0.2} : Point{0.2, 0.5, -0.6};
    TangentVector e1 = frame_vector(p, {1.0, 0.0, 0.0});
    TangentVector e2 = frame_vector(p, {0.0, 1.0, 0.0});
    TangentVector e3 = frame_vector(p, {0.0, 0.0, 1.0});
    CHECK((cross(space, e1, e2).comps - e3.comps).norm() < 1e-14);
    CHECK((cross(space, e2, e3).comps - e1.comps).norm() < 1e-14);
    CHECK((cross(space, e3, e1).comps - e2.comps).norm() < 1e-14);
    CHECK(cross(space, e1, e1).comps.norm() < 1e-15);
  }
}

TEST_CASE("cross: Lagrange identity at random points") {
  for (const AmbientSpace& space : default_spaces()) {
    Sampler rng(11);
    for (int i = 0; i < 50; ++i) {
      Point p = rng.point_in(space);
      TangentVector u = coordinate_vector(p, rng.box(1.0));
      TangentVector v = coordinate_vector(p, rng.box(1.0));
      TangentVector w = cross(space, u, v);
      double lhs = inner(space, w, w);
      double rhs = inner(space, u, u) * inner(space, v, v) -
                   inner(space, u, v) * inner(space, u, v);
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
      CHECK(std::abs(inner(space, w, u)) < 1e-12);
      CHECK(std::abs(inner(space, w, v)) < 1e-12);
    }
  }
}

TEST_CASE("basis conversion round-trip and frame unit triples") {
  AmbientSpace space = AmbientSpace::e3(1.0, 0.25);
  Sampler rng(3);
  for (int i = 0; i < 50; ++i) {
    Point p = rng.point_in(space);
    Vec3 c = rng.box(2.0);
    TangentVector v = coordinate_vector(p, c);
    TangentVector round = to_coordinate(space, to_frame(space, v));
    CHECK((round.comps - c).norm() < 1e-12 * (1.0 + c.norm()));
  }
  // Frame components of E_i are the standard unit triples.
  Point p{0.2, -0.7, 0.3};
  Mat3 F = frame_at(space, p);
  for (int i = 0; i < 3; ++i) {
    TangentVector ei = coordinate_vector(p, F.col(i));
    Vec3 f = to_frame(space, ei).comps;
    CHECK((f - Vec3::Unit(i)).norm() < 1e-12);
  }
}

TEST_CASE("christoffel: Sol3 values at the origin") {
  // Hand-differentiated from g = diag(e^{2 x3}, e^{-2 x3}, 1):
  // Gamma^3_11 = -1, Gamma^3_22 = +1, Gamma^1_13 = 1, Gamma^2_23 = -1.
  auto gamma = christoffel_at(AmbientSpace::sol3(), {0.0, 0.0, 0.0});
  CHECK(gamma[2](0, 0) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(gamma[2](1, 1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gamma[0](0, 2) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gamma[1](1, 2) == doctest::Approx(-1.0).epsilon(1e-9));
  double off = std::abs(gamma[0](0, 0)) + std::abs(gamma[0](1, 1)) +
               std::abs(gamma[1](0, 0)) + std::abs(gamma[2](0, 1)) +
               std::abs(gamma[2](2, 2)) + std::abs(gamma[0](1, 2));
  CHECK(off < 1e-8);
}

TEST_CASE("christoffel: symmetry in the lower indices") {
  AmbientSpace space = AmbientSpace::e3(-1.0, 0.7);
  auto gamma = christoffel_at(space, {0.3, 0.1, -0.4});
  for (int k = 0; k < 3; ++k) {
    CHECK((gamma[k] - gamma[k].transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("christoffel: product structure of H2xR kills index-3 symbols") {
  auto gamma = christoffel_at(AmbientSpace::h2xr(), {0.4, -0.3, 0.8});
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (k == 2 || i == 2 || j == 2) {
          worst = std::max(worst, std::abs(gamma[k](i, j)));
        }
      }
    }
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("christoffel: metric compatibility") {
  for (const AmbientSpace& space : default_spaces()) {
    CheckResult r = check_christoffel_compatibility(space, 5, 5);
    CHECK(r.passed);
  }
}

TEST_CASE("divergence: div Xi = 1 at random points") {
  for (const AmbientSpace& space : default_spaces()) {
    Sampler rng(17);
    VectorField xi = volume_field_of(space);
    for (int i = 0; i < 100; ++i) {
      CHECK(std::abs(divergence(space, xi, rng.point_in(space)) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("divergence: E3 vertical field and Killing fields are divergence free") {
  AmbientSpace space = AmbientSpace::e3(1.0, 0.25);
  Sampler rng(19);
  VectorField e3 = [&space](const Point& q) -> Vec3 {
    return Vec3(0.0, 0.0, 1.0);
  };
  for (int i = 0; i < 20; ++i) {
    Point p = rng.point_in(space);
    CHECK(std::abs(divergence(space, e3, p)) < 1e-8);
  }
  for (const AmbientSpace& sp : default_spaces()) {
    Sampler rng2(23);
    for (SymmetryId id : symmetries_of(sp)) {
      VectorField S = killing_field_of(sp, id);
      for (int i = 0; i < 10; ++i) {
        CHECK(std::abs(divergence(sp, S, rng2.point_in(sp))) < 1e-6);
      }
    }
  }
}

TEST_CASE("divergence agrees with the Christoffel-trace formula") {
  AmbientSpace space = AmbientSpace::sol3();
  Sampler rng(29);
  VectorField X = [](const Point& q) -> Vec3 {
    return {q[0] * q[1], std::sin(q[2]), q[0] - q[2] * q[2]};
  };
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    Point p = rng.point_in(space);
    double a = divergence(space, X, p);
    // div X = d_i X^i + Gamma^i_{ij} X^j
    auto gamma = christoffel_at(space, p);
    double b = 0.0;
    for (int k = 0; k < 3; ++k) {
      Point pp = p, pm = p;
      pp[k] += h;
      pm[k] -= h;
      b += (X(pp)[k] - X(pm)[k]) / (2.0 * h);
    }
    Vec3 xp = X(p);
    for (int i2 = 0; i2 < 3; ++i2) {
      for (int j = 0; j < 3; ++j) b += gamma[i2](i2, j) * xp[j];
    }
    CHECK(std::abs(a - b) < 1e-6);
  }
}

TEST_CASE("curl: zero field has zero curl") {
  AmbientSpace space = AmbientSpace::nil3();
  FrameField zero = [](const Point&) { return Vec3::Zero().eval(); };
  CHECK(curl_frame(space, zero, {0.1, 0.2, 0.3}).comps.norm() < 1e-12);
}

TEST_CASE("curl: Sol3 potential F1 = x2 E3 has curl S1") {
  AmbientSpace space = AmbientSpace::sol3();
  Sampler rng(31);
  FrameField f1 = [](const Point& q) { return Vec3(0.0, 0.0, q[1]); };
  for (int i = 0; i < 20; ++i) {
    Point p = rng.point_in(space);
    Vec3 got = curl_frame(space, f1, p).comps;
    Vec3 want = to_frame(space, killing_field(space, SymmetryId::Translation1, p)).comps;
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("curl: E3 tau != 0 vertical potential") {
  AmbientSpace space = AmbientSpace::e3(1.0, 0.25);
  Sampler rng(37);
  double tau = space.tau();
  FrameField f3 = [tau](const Point&) { return Vec3(0.0, 0.0, -1.0 / (2.0 * tau)); };
  for (int i = 0; i < 20; ++i) {
    Point p = rng.point_in(space);
    Vec3 got = curl_frame(space, f3, p).comps;
    CHECK((got - Vec3(0.0, 0.0, 1.0)).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("curl: gradient fields are curl free") {
  for (const AmbientSpace& space : default_spaces()) {
    auto psi = [](const Point& q) { return q[0] * q[1] * q[2]; };
    VectorField grad = [&space, psi](const Point& q) -> Vec3 {
      return gradient(space, psi, q).comps;
    };
    Sampler rng(41);
    for (int i = 0; i < 10; ++i) {
      Point p = rng.point_in(space);
      CHECK(curl_numeric(space, grad, p).comps.cwiseAbs().maxCoeff() < 1e-5);
      CHECK(curl_frame(space, frame_components_field(space, grad), p)
                .comps.cwiseAbs()
                .maxCoeff() < 1e-5);
    }
  }
}

TEST_CASE("curl: frame formula against the coordinate star-d route") {
  for (const AmbientSpace& space : default_spaces()) {
    CheckResult r = check_curl_frame_vs_numeric(space, 43, 20);
    CHECK(r.max_error < 1e-5);
  }
}

TEST_CASE("richardson extrapolation stays consistent") {
  AmbientSpace space = AmbientSpace::sol3();
  FdConfig plain, rich;
  rich.richardson = true;
  Point p{0.2, -0.1, 0.4};
  VectorField xi = volume_field_of(space);
  CHECK(std::abs(divergence(space, xi, p, plain) - divergence(space, xi, p, rich)) <
        1e-9);
}

TEST_SUITE_END();
