#include "nflux/verify.hpp"

#include <cmath>

namespace nflux {

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel(double err, double scale) { return err / std::max(1.0, std::abs(scale)); }

// Random polynomial vector field of degree two with bounded coefficients.
VectorField random_polynomial_field(Sampler& rng) {
  std::array<double, 30> c;
  for (double& x : c) x = rng.uniform(-1.0, 1.0);
  return [c](const Point& p) -> Vec3 {
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
      const double* a = c.data() + 10 * i;
      out[i] = a[0] + a[1] * p[0] + a[2] * p[1] + a[3] * p[2] + a[4] * p[0] * p[1] +
               a[5] * p[0] * p[2] + a[6] * p[1] * p[2] + a[7] * p[0] * p[0] +
               a[8] * p[1] * p[1] + a[9] * p[2] * p[2];
    }
    return out;
  };
}

}  // namespace

CheckResult make_result(const std::string& name, double max_error, double tolerance,
                        int samples, std::uint64_t seed) {
  return CheckResult{name, max_error, tolerance, max_error <= tolerance, samples, seed};
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

CheckResult check_frame_orthonormality(const AmbientSpace& space, std::uint64_t seed,
                                       int n) {
  Sampler rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Point p = rng.point_in(space);
    Mat3 F = frame_at(space, p);
    Mat3 gram = F.transpose() * metric_at(space, p) * F;
    worst = std::max(worst, (gram - Mat3::Identity()).cwiseAbs().maxCoeff());
  }
  return make_result("frame_orthonormality", worst, 1e-10, n, seed);
}

CheckResult check_cross_identities(const AmbientSpace& space, std::uint64_t seed,
                                   int n) {
  Sampler rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Point p = rng.point_in(space);
    TangentVector u = coordinate_vector(p, rng.box(1.0));
    TangentVector v = coordinate_vector(p, rng.box(1.0));
    TangentVector w = cross(space, u, v);
    double uu = inner(space, u, u), vv = inner(space, v, v), uv = inner(space, u, v);
    double lagrange = std::abs(inner(space, w, w) - (uu * vv - uv * uv));
    double ortho = std::max(std::abs(inner(space, w, u)), std::abs(inner(space, w, v)));
    worst = std::max({worst, rel(lagrange, uu * vv), rel(ortho, std::sqrt(uu * vv))});
  }
  return make_result("cross_identities", worst, 1e-10, n, seed);
}

CheckResult check_basis_roundtrip(const AmbientSpace& space, std::uint64_t seed, int n) {
  Sampler rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Point p = rng.point_in(space);
    TangentVector v = coordinate_vector(p, rng.box(1.0));
    TangentVector back = to_coordinate(space, to_frame(space, v));
    worst = std::max(worst, (back.comps - v.comps).norm() / (1.0 + v.comps.norm()));
    TangentVector f = frame_vector(p, rng.box(1.0));
    TangentVector back2 = to_frame(space, to_coordinate(space, f));
    worst = std::max(worst, (back2.comps - f.comps).norm() / (1.0 + f.comps.norm()));
  }
  return make_result("basis_roundtrip", worst, 1e-12, n, seed);
}

CheckResult check_christoffel_compatibility(const AmbientSpace& space,
                                            std::uint64_t seed, int n) {
  Sampler rng(seed);
  const double h = 1e-5;
  double worst = 0.0;
  for (int s = 0; s < n; ++s) {
    Point p = rng.point_in(space);
    auto gamma = christoffel_at(space, p);
    Mat3 g = metric_at(space, p);
    // d_k g_ij = Gamma^l_{ki} g_lj + Gamma^l_{kj} g_il
    for (int k = 0; k < 3; ++k) {
      Point pp = p, pm = p;
      pp[k] += h;
      pm[k] -= h;
      Mat3 dg = (metric_at(space, pp) - metric_at(space, pm)) / (2.0 * h);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          double lhs = dg(i, j);
          double rhs = 0.0;
          for (int l = 0; l < 3; ++l) {
            rhs += gamma[l](k, i) * g(l, j) + gamma[l](k, j) * g(i, l);
          }
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
  }
  return make_result("christoffel_metric_compatibility", worst, 1e-6, n, seed);
}

CheckResult check_curl_frame_vs_numeric(const AmbientSpace& space, std::uint64_t seed,
                                        int n) {
  Sampler rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    VectorField X = random_polynomial_field(rng);
    Point p = rng.point_in(space);
    Vec3 a = curl_frame(space, frame_components_field(space, X), p).comps;
    Vec3 b = to_frame(space, curl_numeric(space, X, p)).comps;
    worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
  }
  return make_result("curl_frame_vs_numeric", worst, 1e-5, n, seed);
}

CheckResult check_divergence_volume_field(const AmbientSpace& space, std::uint64_t seed,
                                          int n, const VectorField* corrupted) {
  Sampler rng(seed);
  VectorField xi = corrupted ? *corrupted : volume_field_of(space);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(divergence(space, xi, rng.point_in(space)) - 1.0));
  }
  return make_result("divergence_volume_field", worst, 1e-8, n, seed);
}

CheckResult check_field_killing_defect(const AmbientSpace& space, std::uint64_t seed,
                                       int n, const std::string& name,
                                       const VectorField& field) {
  Sampler rng(seed);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    Point p = rng.point_in(space);
    TangentVector u = coordinate_vector(p, rng.box(1.0));
    TangentVector v = coordinate_vector(p, rng.box(1.0));
    TangentVector du = covariant_derivative(space, field, u);
    TangentVector dv = covariant_derivative(space, field, v);
    worst = std::max(worst, std::abs(inner(space, du, v) + inner(space, dv, u)));
  }
  return make_result(name, worst, 1e-5, n, seed);
}

CheckResult check_killing_defect(const AmbientSpace& space, std::uint64_t seed, int n) {
  double worst = 0.0;
  for (SymmetryId id : symmetries_of(space)) {
    CheckResult r = check_field_killing_defect(space, seed, n, "killing_defect",
                                               killing_field_of(space, id));
    worst = std::max(worst, r.max_error);
  }
  return make_result("killing_defect", worst, 1e-5, n, seed);
}

CheckResult check_potential_curl(const AmbientSpace& space, std::uint64_t seed, int n,
                                 double potential_sign) {
  Sampler rng(seed);
  double worst = 0.0;
  for (SymmetryId id : symmetries_of(space)) {
    VectorField F = potential_field_of(space, id);
    VectorField signed_f = [F, potential_sign](const Point& q) -> Vec3 {
      return potential_sign * F(q);
    };
    FrameField ff = frame_components_field(space, signed_f);
    for (int i = 0; i < n; ++i) {
      Point p = rng.point_in(space);
      Vec3 curl = curl_frame(space, ff, p).comps;
      Vec3 s = to_frame(space, killing_field(space, id, p)).comps;
      worst = std::max(worst, (curl - s).cwiseAbs().maxCoeff());
    }
  }
  return make_result("potential_curl_matches_killing", worst, 1e-5, n, seed);
}

CheckResult check_flow_consistency(const AmbientSpace& space, std::uint64_t seed,
                                   int n) {
  Sampler rng(seed);
  const double h = 1e-6;
  double worst = 0.0;
  for (SymmetryId id : symmetries_of(space)) {
    for (int i = 0; i < n; ++i) {
      Point p = rng.point_in(space);
      Vec3 fd =
          (isometry_apply(space, id, h, p) - isometry_apply(space, id, -h, p)) /
          (2.0 * h);
      worst = std::max(
          worst, (fd - killing_field(space, id, p).comps).cwiseAbs().maxCoeff());
    }
  }
  return make_result("flow_consistency", worst, 1e-7, n, seed);
}

CheckResult check_group_law(const AmbientSpace& space, std::uint64_t seed, int n) {
  Sampler rng(seed);
  double worst = 0.0;
  for (SymmetryId id : symmetries_of(space)) {
    std::vector<Point> pts;
    for (int i = 0; i < std::max(1, n / 4); ++i) pts.push_back(rng.point_in(space));
    double t = rng.uniform(-0.8, 0.8), s = rng.uniform(-0.8, 0.8);
    worst = std::max(worst, group_law_check(space, id, t, s, pts));
  }
  return make_result("group_law", worst, 1e-9, n, seed);
}

CheckResult check_isometry_metric_preservation(const AmbientSpace& space,
                                               std::uint64_t seed, int n) {
  Sampler rng(seed);
  double worst = 0.0;
  for (SymmetryId id : symmetries_of(space)) {
    for (int i = 0; i < n; ++i) {
      Point p = rng.point_in(space);
      double t = rng.uniform(-1.0, 1.0);
      TangentVector u = coordinate_vector(p, rng.box(1.0));
      TangentVector v = coordinate_vector(p, rng.box(1.0));
      TangentVector du = isometry_differential(space, id, t, p, u);
      TangentVector dv = isometry_differential(space, id, t, p, v);
      double defect = std::abs(inner(space, du, dv) - inner(space, u, v));
      worst = std::max(worst, defect);
    }
  }
  return make_result("isometry_metric_preservation", worst, 1e-9, n, seed);
}

CheckResult check_killing_divergence_free(const AmbientSpace& space, std::uint64_t seed,
                                          int n) {
  Sampler rng(seed);
  double worst = 0.0;
  for (SymmetryId id : symmetries_of(space)) {
    VectorField S = killing_field_of(space, id);
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(divergence(space, S, rng.point_in(space))));
    }
  }
  return make_result("killing_divergence_free", worst, 1e-6, n, seed);
}

std::vector<CheckResult> suite_geometry(const AmbientSpace& space, std::uint64_t seed,
                                        int n) {
  if (n == 0) return {};
  return {check_frame_orthonormality(space, seed, n),
          check_cross_identities(space, seed, n),
          check_basis_roundtrip(space, seed, n),
          check_christoffel_compatibility(space, seed, std::max(1, n / 10)),
          check_curl_frame_vs_numeric(space, seed, std::max(1, n / 5)),
          check_divergence_volume_field(space, seed, n)};
}

std::vector<CheckResult> suite_fields(const AmbientSpace& space, std::uint64_t seed,
                                      int n) {
  if (n == 0) return {};
  return {check_killing_defect(space, seed, std::max(1, n / 2)),
          check_potential_curl(space, seed, std::max(1, n / 2)),
          check_flow_consistency(space, seed, n),
          check_group_law(space, seed, n),
          check_isometry_metric_preservation(space, seed, std::max(1, n / 2)),
          check_killing_divergence_free(space, seed, std::max(1, n / 2))};
}

namespace {

struct FamilyFixture {
  SurfacePatch patch;
  double H = 0.0;
  std::vector<Cycle> cycles;  // homologous cycles
  double reference_sigma3 = 0.0;
  bool has_reference_sigma3 = false;
  double sigma3_rel_tol = 1e-6;
  double h_tolerance = 1e-5;
  double other_flux_tol = 1e-8;
};

FamilyFixture build_fixture(const FamilySpec& family) {
  FamilyFixture fx;
  switch (family.id) {
    case FamilyId::VerticalCatenoid: {
      auto cat = nil_vertical_catenoid(family.param, 2.0);
      fx.patch = cat.patch;
      fx.H = 0.0;
      fx.cycles = {cat.cycle(-1.0), cat.cycle(0.0), cat.cycle(0.7), cat.cycle(1.5)};
      fx.reference_sigma3 = 2.0 * kPi * family.param;
      fx.has_reference_sigma3 = true;
      fx.h_tolerance = 1e-5;
      break;
    }
    case FamilyId::HorizontalCatenoid: {
      auto dh = nil_horizontal_catenoid(family.param);
      fx.patch = dh.patch;
      fx.H = 0.0;
      fx.cycles = {dh.cycle(0.0), dh.cycle(0.5)};
      fx.h_tolerance = 1e-5;
      fx.other_flux_tol = 1e-5;
      break;
    }
    case FamilyId::RotationalEnd: {
      auto end = h2r_rotational_end(family.param);
      fx.patch = end.patch;
      fx.H = 0.5;
      fx.cycles = {end.cycle(0.65), end.cycle(0.75), end.cycle(0.9)};
      fx.reference_sigma3 = 2.0 * kPi * (1.0 - family.param);
      fx.has_reference_sigma3 = true;
      fx.sigma3_rel_tol = 1e-5;
      fx.h_tolerance = 1e-4;
      fx.other_flux_tol = 1e-7;
      break;
    }
    case FamilyId::Sol3Plane: {
      fx.patch = sol3_horizontal_plane();
      fx.H = 0.0;
      fx.cycles = {circle_cycle({0.0, 0.0}, 1.0), circle_cycle({0.3, -0.2}, 1.5)};
      fx.reference_sigma3 = 0.0;
      fx.h_tolerance = 1e-6;
      break;
    }
  }
  return fx;
}

}  // namespace

std::vector<CheckResult> suite_noether(const FamilySpec& family, std::uint64_t seed) {
  FamilyFixture fx = build_fixture(family);
  const AmbientSpace& space = fx.patch.space;
  std::vector<CheckResult> out;

  // Mean curvature at the family's nominal H over a sample grid.
  {
    double worst = 0.0;
    int grid = 8;
    for (int i = 1; i < grid; ++i) {
      for (int j = 1; j < grid; ++j) {
        double u = fx.patch.u_min + (fx.patch.u_max - fx.patch.u_min) * i / grid;
        double v = fx.patch.v_min + (fx.patch.v_max - fx.patch.v_min) * j / grid;
        worst = std::max(worst, std::abs(mean_curvature(fx.patch, u, v) - fx.H));
      }
    }
    out.push_back(
        make_result("mean_curvature_nominal", worst, fx.h_tolerance, grid * grid, seed));
  }

  FluxReport base = flux_report(space, fx.H, fx.patch, fx.cycles.front());

  if (fx.has_reference_sigma3) {
    double err = std::abs(base.sigma3 - fx.reference_sigma3) /
                 std::max(1.0, std::abs(fx.reference_sigma3));
    out.push_back(make_result("sigma3_reference", err, fx.sigma3_rel_tol,
                              fx.cycles.front().samples, seed));
  }

  // Fluxes the paper reports as zero.
  {
    double worst = std::max(std::abs(base.sigma1),
                            family.id == FamilyId::HorizontalCatenoid ||
                                    family.id == FamilyId::Sol3Plane
                                ? 0.0
                                : std::abs(base.sigma2));
    if (family.id == FamilyId::HorizontalCatenoid) {
      worst = std::max(worst, std::abs(base.sigma3));
    }
    if (base.sigmaR) worst = std::max(worst, std::abs(*base.sigmaR));
    out.push_back(make_result("vanishing_fluxes", worst, fx.other_flux_tol,
                              fx.cycles.front().samples, seed));
  }

  // Homological invariance across the declared cycles.
  {
    double worst = 0.0;
    for (SymmetryId id : symmetries_of(space)) {
      NoetherContext ctx = make_context(space, fx.H, fx.patch, id);
      worst = std::max(worst, homological_invariance(ctx, fx.cycles));
    }
    double tol = family.id == FamilyId::HorizontalCatenoid ? 1e-5 : 1e-7;
    out.push_back(make_result("homological_invariance", worst, tol,
                              int(fx.cycles.size()), seed));
  }

  // Quadrature stability under sample doubling.
  {
    double worst = 0.0;
    for (SymmetryId id : symmetries_of(space)) {
      NoetherContext ctx = make_context(space, fx.H, fx.patch, id);
      Cycle c = fx.cycles.front();
      c.samples = 1024;
      double f1 = flux(ctx, c);
      c.samples = 2048;
      double f2 = flux(ctx, c);
      worst = std::max(worst, std::abs(f1 - f2));
    }
    out.push_back(make_result("quadrature_doubling", worst, 1e-9, 2048, seed));
  }

  // Transformation table rows at flux level on the pushed surfaces.
  {
    double worst = 0.0;
    auto table = noether_transformation_table(space, fx.H);
    for (double t : {0.5}) {
      for (SymmetryId action : symmetries_of(space)) {
        IsometryAction act{space, action, t};
        SurfacePatch pushed = pushforward_surface(fx.patch, act);
        for (SymmetryId form : symmetries_of(space)) {
          if (!table_row(table, form, action).flux_level) continue;
          NoetherContext ctx = make_context(space, fx.H, pushed, form);
          double lhs = flux(ctx, fx.cycles.front());
          double rhs = transformation_table_predict(space, fx.H, form, act, base);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
    out.push_back(make_result("transformation_rows_flux", worst, 1e-6,
                              fx.cycles.front().samples, seed));
  }

  // Pointwise adjoint identities for the minimal parts of every row.
  {
    Sampler rng(seed);
    double worst = 0.0;
    auto table = noether_transformation_table(space, fx.H);
    for (int i = 0; i < 12; ++i) {
      double u = rng.uniform(fx.patch.u_min, fx.patch.u_max);
      double v = rng.uniform(fx.patch.v_min, fx.patch.v_max);
      Vec2 w(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      double t = rng.uniform(0.1, 1.0);
      for (const TableRow& row : table) {
        IsometryAction act{space, row.action, t};
        NoetherContext ctx = make_context(space, fx.H, fx.patch, row.form);
        double lhs = transformed_minimal_part(ctx, act, u, v, w);
        double rhs = 0.0;
        for (const TableTerm& term : row.terms) {
          NoetherContext src = make_context(space, fx.H, fx.patch, term.source);
          rhs += term.coef(space, t) * noether_minimal_part(src, u, v, w);
        }
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    out.push_back(make_result("transformation_rows_pointwise", worst, 1e-6, 12, seed));
  }

  // Gauge independence: adding a gradient to the potential must not move
  // the flux.
  if (fx.H != 0.0) {
    VectorField grad = [&space](const Point& p) -> Vec3 {
      auto psi = [](const Point& q) { return q[0] * q[1] * q[2]; };
      return gradient(space, psi, p).comps;
    };
    double worst = 0.0;
    for (SymmetryId id : symmetries_of(space)) {
      NoetherContext ctx = make_context(space, fx.H, fx.patch, id);
      double plain = flux(ctx, fx.cycles.front());
      ctx.gauge = grad;
      double gauged = flux(ctx, fx.cycles.front());
      worst = std::max(worst, std::abs(plain - gauged));
    }
    out.push_back(
        make_result("gauge_independence", worst, 1e-8, fx.cycles.front().samples, seed));
  }

  return out;
}

std::vector<CheckResult> suite_negative_controls(const AmbientSpace& space,
                                                 std::uint64_t seed, int n) {
  std::vector<CheckResult> out;
  VectorField bad_xi = [&space](const Point& p) -> Vec3 {
    return 2.0 * to_coordinate(space, volume_field(space, p)).comps;
  };
  CheckResult xi = check_divergence_volume_field(space, seed, n, &bad_xi);
  xi.name = "corrupted_volume_field";
  out.push_back(xi);

  VectorField non_killing = [&space](const Point& p) -> Vec3 {
    Mat3 F = frame_at(space, p);
    return p[0] * F.col(0);
  };
  out.push_back(
      check_field_killing_defect(space, seed, n, "non_killing_field", non_killing));

  out.push_back(check_potential_curl(space, seed, std::max(1, n / 2), -1.0));
  out.back().name = "mis_signed_potential";
  return out;
}

std::vector<AmbientSpace> default_spaces() {
  return {AmbientSpace::e3(1.0, 0.25),  AmbientSpace::nil3(),
          AmbientSpace::e3(-1.0, 0.7), AmbientSpace::h2xr(),
          AmbientSpace::e3(1.0, 0.0),  AmbientSpace::sol3()};
}

}  // namespace nflux
