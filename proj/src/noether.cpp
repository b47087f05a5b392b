#include "nflux/noether.hpp"

#include <cmath>

#include "nflux/quadrature.hpp"

namespace nflux {

namespace {

double wrap_to_period(double delta, double period) {
  if (period <= 0.0) return delta;
  double k = std::round(delta / period);
  return delta - k * period;
}

// Evaluates a field at S(t) p and transports it back with dS(t)^{-1} =
// dS(-t); the result is rebased at p.
TangentVector pulled_back_field(const AmbientSpace& space, const IsometryAction& action,
                                const Point& p, const VectorField& field) {
  Point q = isometry_apply(space, action.which, action.t, p);
  TangentVector vq = coordinate_vector(q, field(q));
  TangentVector back = isometry_differential(space, action.which, -action.t, q, vq);
  return coordinate_vector(p, back.comps);
}

VectorField context_potential_field(const NoetherContext& ctx) {
  VectorField base = potential_field_of(ctx.space, ctx.symmetry);
  if (!ctx.gauge) return base;
  VectorField gauge = ctx.gauge;
  return [base, gauge](const Point& q) -> Vec3 { return base(q) + gauge(q); };
}

void ensure_cmc_part_usable(const NoetherContext& ctx) {
  if (ctx.H == 0.0) return;
  double um = 0.5 * (ctx.surface.u_min + ctx.surface.u_max);
  double vm = 0.5 * (ctx.surface.v_min + ctx.surface.v_max);
  std::vector<Point> at = {ctx.surface.chart(um, vm),
                           ctx.surface.chart(0.75 * um + 0.25 * ctx.surface.u_min, vm),
                           ctx.surface.chart(um, 0.75 * vm + 0.25 * ctx.surface.v_min)};
  if (!potential_available(ctx.space, ctx.symmetry, at)) {
    throw Error(ErrorKind::PotentialUnavailable,
                "curl F = S fails numerically for " + symmetry_name(ctx.symmetry) +
                    " in " + ctx.space.name());
  }
}

}  // namespace

Vec2 cycle_point(const Cycle& c, double s) { return c.curve(s); }

Vec2 cycle_velocity(const Cycle& c, double s) {
  if (c.derivative) return c.derivative(s);
  const double h = 1e-7;
  return (c.curve(s + h) - c.curve(s - h)) / (2.0 * h);
}

double cycle_closure_defect(const SurfacePatch& s, const Cycle& c) {
  Vec2 d = c.curve(1.0) - c.curve(0.0);
  double du = wrap_to_period(d[0], s.periodic_u ? s.period_u : 0.0);
  double dv = wrap_to_period(d[1], s.periodic_v ? s.period_v : 0.0);
  return std::hypot(du, dv);
}

NoetherContext make_context(const AmbientSpace& space, double H,
                            const SurfacePatch& surface, SymmetryId symmetry) {
  require_symmetry(space, symmetry);
  if (!std::isfinite(H)) {
    throw Error(ErrorKind::ConfigError, "mean curvature H must be finite");
  }
  return NoetherContext{space, H, surface, symmetry, nullptr};
}

bool potential_available(const AmbientSpace& space, SymmetryId which,
                         const std::vector<Point>& at, double tol) {
  if (!symmetry_valid(space, which)) return false;
  FrameField f = frame_components_field(space, potential_field_of(space, which));
  for (const Point& p : at) {
    Vec3 curl = curl_frame(space, f, p).comps;
    Vec3 s = to_frame(space, killing_field(space, which, p)).comps;
    if ((curl - s).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

double noether_minimal_part(const NoetherContext& ctx, double u, double v,
                            const Vec2& w) {
  Point p = ctx.surface.chart(u, v);
  TangentVector star = star_df(ctx.surface, u, v, w);
  return inner(ctx.space, killing_field(ctx.space, ctx.symmetry, p), star);
}

double noether_cmc_part(const NoetherContext& ctx, double u, double v, const Vec2& w) {
  Point p = ctx.surface.chart(u, v);
  TangentVector df = differential(ctx.surface, u, v, w);
  VectorField F = context_potential_field(ctx);
  return inner(ctx.space, coordinate_vector(p, F(p)), df);
}

double noether_form_value(const NoetherContext& ctx, double u, double v,
                          const Vec2& w) {
  double value = noether_minimal_part(ctx, u, v, w);
  if (ctx.H != 0.0) value -= 2.0 * ctx.H * noether_cmc_part(ctx, u, v, w);
  return value;
}

double flux(const NoetherContext& ctx, const Cycle& cycle) {
  if (cycle_closure_defect(ctx.surface, cycle) > 1e-9) {
    throw Error(ErrorKind::ConfigError, "cycle '" + cycle.id + "' does not close");
  }
  ensure_cmc_part_usable(ctx);
  double sign = cycle.reversed ? -1.0 : 1.0;
  auto integrand = [&](double s) {
    Vec2 uv = cycle_point(cycle, s);
    return noether_form_value(ctx, uv[0], uv[1], cycle_velocity(cycle, s));
  };
  return sign * trapezoid_periodic(integrand, cycle.samples);
}

double flux_checked(const NoetherContext& ctx, const Cycle& cycle, double tol,
                    int n_max) {
  Cycle c = cycle;
  double prev = flux(ctx, c);
  while (c.samples < n_max) {
    c.samples *= 2;
    double next = flux(ctx, c);
    if (std::abs(next - prev) < tol) return next;
    prev = next;
  }
  throw Error(ErrorKind::NonConvergent,
              "flux quadrature did not converge by n = " + std::to_string(n_max));
}

std::optional<double> FluxReport::get(SymmetryId which) const {
  switch (which) {
    case SymmetryId::Translation1: return sigma1;
    case SymmetryId::Translation2: return sigma2;
    case SymmetryId::Translation3: return sigma3;
    case SymmetryId::Rotation: return sigmaR;
  }
  return std::nullopt;
}

FluxReport flux_report(const AmbientSpace& space, double H, const SurfacePatch& surface,
                       const Cycle& cycle) {
  FluxReport report;
  report.n = cycle.samples;
  report.cycle_id = cycle.id;
  report.H = H;
  for (SymmetryId id : symmetries_of(space)) {
    double value = flux(make_context(space, H, surface, id), cycle);
    switch (id) {
      case SymmetryId::Translation1: report.sigma1 = value; break;
      case SymmetryId::Translation2: report.sigma2 = value; break;
      case SymmetryId::Translation3: report.sigma3 = value; break;
      case SymmetryId::Rotation: report.sigmaR = value; break;
    }
  }
  return report;
}

double homological_invariance(const NoetherContext& ctx,
                              const std::vector<Cycle>& cycles) {
  std::vector<double> values;
  values.reserve(cycles.size());
  for (const Cycle& c : cycles) values.push_back(flux(ctx, c));
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      worst = std::max(worst, std::abs(values[i] - values[j]));
    }
  }
  return worst;
}

double transformed_minimal_part(const NoetherContext& ctx, const IsometryAction& action,
                                double u, double v, const Vec2& w) {
  Point p = ctx.surface.chart(u, v);
  TangentVector s =
      pulled_back_field(ctx.space, action, p, killing_field_of(ctx.space, ctx.symmetry));
  return inner(ctx.space, s, star_df(ctx.surface, u, v, w));
}

double transformed_cmc_part(const NoetherContext& ctx, const IsometryAction& action,
                            double u, double v, const Vec2& w) {
  Point p = ctx.surface.chart(u, v);
  TangentVector f = pulled_back_field(ctx.space, action, p, context_potential_field(ctx));
  return inner(ctx.space, f, differential(ctx.surface, u, v, w));
}

double transformed_form_value(const NoetherContext& ctx, const IsometryAction& action,
                              double u, double v, const Vec2& w) {
  double value = transformed_minimal_part(ctx, action, u, v, w);
  if (ctx.H != 0.0) value -= 2.0 * ctx.H * transformed_cmc_part(ctx, action, u, v, w);
  return value;
}

namespace {

using Coef = std::function<double(const AmbientSpace&, double)>;

Coef constant(double value) {
  return [value](const AmbientSpace&, double) { return value; };
}

// Moebius parameter of the action evaluated at the flow parameter.
double mb(const AmbientSpace& space, double t) {
  return moebius_parameter(space.kappa_prime(), t);
}

// (1 - kappa' u^2) / (1 + kappa' u^2)
double coef_even(const AmbientSpace& space, double t) {
  double u = mb(space, t), kp = space.kappa_prime();
  return (1.0 - kp * u * u) / (1.0 + kp * u * u);
}

// u / (1 + kappa' u^2)
double coef_odd(const AmbientSpace& space, double t) {
  double u = mb(space, t), kp = space.kappa_prime();
  return u / (1.0 + kp * u * u);
}

void add_e3_rotation_rows(std::vector<TableRow>& rows) {
  using S = SymmetryId;
  rows.push_back({S::Translation1, S::Rotation, true,
                  {{S::Translation1, [](const AmbientSpace&, double t) { return std::cos(t); }},
                   {S::Translation2, [](const AmbientSpace&, double t) { return -std::sin(t); }}}});
  rows.push_back({S::Translation2, S::Rotation, true,
                  {{S::Translation2, [](const AmbientSpace&, double t) { return std::cos(t); }},
                   {S::Translation1, [](const AmbientSpace&, double t) { return std::sin(t); }}}});
}

}  // namespace

std::vector<TableRow> noether_transformation_table(const AmbientSpace& space, double H) {
  using S = SymmetryId;
  std::vector<TableRow> rows;
  if (space.is_sol3()) {
    auto exp_p = [](const AmbientSpace&, double t) { return std::exp(t); };
    auto exp_m = [](const AmbientSpace&, double t) { return std::exp(-t); };
    auto minus_t = [](const AmbientSpace&, double t) { return -t; };
    auto plus_t = [](const AmbientSpace&, double t) { return t; };
    rows.push_back({S::Translation1, S::Translation1, true, {{S::Translation1, constant(1.0)}}});
    rows.push_back({S::Translation1, S::Translation2, true, {{S::Translation1, constant(1.0)}}});
    rows.push_back({S::Translation1, S::Translation3, true, {{S::Translation1, exp_p}}});
    rows.push_back({S::Translation2, S::Translation1, true, {{S::Translation2, constant(1.0)}}});
    rows.push_back({S::Translation2, S::Translation2, true, {{S::Translation2, constant(1.0)}}});
    rows.push_back({S::Translation2, S::Translation3, true, {{S::Translation2, exp_m}}});
    rows.push_back({S::Translation3, S::Translation1, true,
                    {{S::Translation3, constant(1.0)}, {S::Translation1, minus_t}}});
    rows.push_back({S::Translation3, S::Translation2, true,
                    {{S::Translation3, constant(1.0)}, {S::Translation2, plus_t}}});
    rows.push_back({S::Translation3, S::Translation3, true, {{S::Translation3, constant(1.0)}}});
    return rows;
  }

  double tau = space.tau();
  if (tau != 0.0) {
    // mu_1 rows
    rows.push_back({S::Translation1, S::Translation1, true, {{S::Translation1, constant(1.0)}}});
    rows.push_back({S::Translation1, S::Translation2, true,
                    {{S::Translation1, coef_even},
                     {S::Rotation,
                      [](const AmbientSpace& sp, double t) {
                        return 2.0 * coef_odd(sp, t) * 2.0 * sp.kappa_prime();
                      }},
                     {S::Translation3,
                      [](const AmbientSpace& sp, double t) {
                        return 2.0 * coef_odd(sp, t) * sp.tau();
                      }}}});
    rows.push_back({S::Translation1, S::Translation3, true, {{S::Translation1, constant(1.0)}}});
    // mu_2 rows
    rows.push_back({S::Translation2, S::Translation1, true,
                    {{S::Translation2, coef_even},
                     {S::Rotation,
                      [](const AmbientSpace& sp, double t) {
                        return -2.0 * coef_odd(sp, t) * 2.0 * sp.kappa_prime();
                      }},
                     {S::Translation3,
                      [](const AmbientSpace& sp, double t) {
                        return -2.0 * coef_odd(sp, t) * sp.tau();
                      }}}});
    rows.push_back({S::Translation2, S::Translation2, true, {{S::Translation2, constant(1.0)}}});
    rows.push_back({S::Translation2, S::Translation3, true, {{S::Translation2, constant(1.0)}}});
    add_e3_rotation_rows(rows);
    // mu_3 rows: invariant under all four families
    for (S action : {S::Translation1, S::Translation2, S::Translation3, S::Rotation}) {
      rows.push_back({S::Translation3, action, true, {{S::Translation3, constant(1.0)}}});
    }
    // mu_R rows
    rows.push_back({S::Rotation, S::Translation1, true,
                    {{S::Rotation, coef_even},
                     {S::Translation2, coef_odd},
                     {S::Translation3,
                      [](const AmbientSpace& sp, double t) {
                        return -coef_odd(sp, t) * sp.tau() * mb(sp, t);
                      }}}});
    rows.push_back({S::Rotation, S::Translation2, true,
                    {{S::Rotation, coef_even},
                     {S::Translation1,
                      [](const AmbientSpace& sp, double t) { return -coef_odd(sp, t); }},
                     {S::Translation3,
                      [](const AmbientSpace& sp, double t) {
                        return -coef_odd(sp, t) * sp.tau() * mb(sp, t);
                      }}}});
    rows.push_back({S::Rotation, S::Translation3, true, {{S::Rotation, constant(1.0)}}});
    rows.push_back({S::Rotation, S::Rotation, true, {{S::Rotation, constant(1.0)}}});
    return rows;
  }

  // tau = 0
  auto four_kp_odd = [](const AmbientSpace& sp, double t) {
    return 4.0 * sp.kappa_prime() * coef_odd(sp, t);
  };
  rows.push_back({S::Translation1, S::Translation1, true, {{S::Translation1, constant(1.0)}}});
  rows.push_back({S::Translation1, S::Translation2, true,
                  {{S::Translation1, coef_even}, {S::Rotation, four_kp_odd}}});
  rows.push_back({S::Translation1, S::Translation3, true, {{S::Translation1, constant(1.0)}}});
  rows.push_back({S::Translation2, S::Translation1, true,
                  {{S::Translation2, coef_even},
                   {S::Rotation, [four_kp_odd](const AmbientSpace& sp, double t) {
                      return -four_kp_odd(sp, t);
                    }}}});
  rows.push_back({S::Translation2, S::Translation2, true, {{S::Translation2, constant(1.0)}}});
  rows.push_back({S::Translation2, S::Translation3, true, {{S::Translation2, constant(1.0)}}});
  add_e3_rotation_rows(rows);
  rows.push_back({S::Rotation, S::Translation1, true,
                  {{S::Rotation, coef_even}, {S::Translation2, coef_odd}}});
  rows.push_back({S::Rotation, S::Translation2, true,
                  {{S::Rotation, coef_even},
                   {S::Translation1,
                    [](const AmbientSpace& sp, double t) { return -coef_odd(sp, t); }}}});
  rows.push_back({S::Rotation, S::Translation3, true, {{S::Rotation, constant(1.0)}}});
  rows.push_back({S::Rotation, S::Rotation, true, {{S::Rotation, constant(1.0)}}});
  // mu_3: the minimal part is invariant; the CMC part transforms with
  // point-dependent coefficients, so the row descends to fluxes only for
  // minimal surfaces.
  bool minimal = (H == 0.0);
  for (S action : {S::Translation1, S::Translation2, S::Translation3, S::Rotation}) {
    bool row_at_flux_level =
        minimal || action == S::Translation3 || action == S::Rotation;
    rows.push_back(
        {S::Translation3, action, row_at_flux_level, {{S::Translation3, constant(1.0)}}});
  }
  return rows;
}

const TableRow& table_row(const std::vector<TableRow>& table, SymmetryId form,
                          SymmetryId action) {
  for (const TableRow& row : table) {
    if (row.form == form && row.action == action) return row;
  }
  throw Error(ErrorKind::TableRowUnavailable,
              "no transformation rule for " + symmetry_name(form) + " under " +
                  symmetry_name(action));
}

double transformation_table_predict(const AmbientSpace& space, double H,
                                    SymmetryId form, const IsometryAction& action,
                                    const FluxReport& base) {
  require_symmetry(space, form);
  require_symmetry(space, action.which);
  auto table = noether_transformation_table(space, H);
  const TableRow& row = table_row(table, form, action.which);
  if (!row.flux_level) {
    throw Error(ErrorKind::TableRowUnavailable,
                "the mu_3 rule in E3(kappa, 0) has point-dependent coefficients and "
                "no flux-level form when H != 0");
  }
  double out = 0.0;
  for (const TableTerm& term : row.terms) {
    std::optional<double> value = base.get(term.source);
    if (!value) {
      throw Error(ErrorKind::MissingBaseFlux,
                  "base flux missing for " + symmetry_name(term.source));
    }
    out += term.coef(space, action.t) * (*value);
  }
  return out;
}

double mu3_cmc_transformed_predict(const AmbientSpace& space,
                                   const IsometryAction& action,
                                   const Mu3PointData& data) {
  if (!space.is_e3() || space.tau() != 0.0) {
    throw Error(ErrorKind::TableRowUnavailable,
                "the pointwise mu_3 CMC rule applies to E3(kappa, 0) only");
  }
  double kp = space.kappa_prime();
  double u = moebius_parameter(kp, action.t);
  std::complex<double> i(0.0, 1.0);
  switch (action.which) {
    case SymmetryId::Translation1: {
      double pref = 1.0 / std::norm(1.0 - kp * u * data.w);
      return pref * data.mu3_cmc + pref * u / (2.0 * data.lambda) * data.s2_df;
    }
    case SymmetryId::Translation2: {
      double pref = 1.0 / std::norm(1.0 + i * kp * u * data.w);
      return pref * data.mu3_cmc - pref * u / (2.0 * data.lambda) * data.s1_df;
    }
    default:
      return data.mu3_cmc;
  }
}

std::vector<VanishingRelation> vanishing_by_symmetry(const AmbientSpace& space,
                                                     SymmetryId invariance) {
  using S = SymmetryId;
  require_symmetry(space, invariance);
  std::vector<VanishingRelation> out;
  if (space.is_sol3()) {
    switch (invariance) {
      case S::Translation1: out.push_back({"mu1", {{S::Translation1, 1.0}}}); break;
      case S::Translation2: out.push_back({"mu2", {{S::Translation2, 1.0}}}); break;
      case S::Translation3:
        out.push_back({"mu1", {{S::Translation1, 1.0}}});
        out.push_back({"mu2", {{S::Translation2, 1.0}}});
        break;
      default: break;
    }
    return out;
  }
  double kappa = space.kappa();
  double tau = space.tau();
  if (invariance == S::Rotation) {
    // For cycles homologous to their rotated image.
    out.push_back({"mu1", {{S::Translation1, 1.0}}});
    out.push_back({"mu2", {{S::Translation2, 1.0}}});
    return out;
  }
  if (invariance == S::Translation3) return out;
  S other = (invariance == S::Translation1) ? S::Translation2 : S::Translation1;
  out.push_back({symmetry_name(other) == "Translation1" ? "mu1" : "mu2", {{other, 1.0}}});
  if (tau != 0.0) {
    if (kappa == 0.0) {
      out.push_back({"mu3", {{S::Translation3, 1.0}}});
    } else {
      out.push_back({"kappa*muR + 2*tau*mu3",
                     {{S::Rotation, kappa}, {S::Translation3, 2.0 * tau}}});
    }
  } else {
    out.push_back({"muR", {{S::Rotation, 1.0}}});
  }
  return out;
}

double evaluate_relation(const VanishingRelation& rel, const FluxReport& report) {
  double sum = 0.0;
  for (const auto& [which, coef] : rel.combo) {
    std::optional<double> value = report.get(which);
    if (!value) {
      throw Error(ErrorKind::MissingBaseFlux,
                  "flux missing for " + symmetry_name(which));
    }
    sum += coef * (*value);
  }
  return sum;
}

}  // namespace nflux
