#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nflux/surface.hpp"

namespace nflux {

// Closed curve in the parameter domain of a patch, s in [0, 1); carries
// the homology class of the flux integrals.
struct Cycle {
  std::function<Vec2(double)> curve;
  std::function<Vec2(double)> derivative;  // optional; central differences else
  int samples = 2048;
  bool reversed = false;
  std::string id = "cycle";
};

Vec2 cycle_point(const Cycle& c, double s);
Vec2 cycle_velocity(const Cycle& c, double s);

// Closure defect |curve(1) - curve(0)| modulo the declared periods of the
// patch axes.
double cycle_closure_defect(const SurfacePatch& s, const Cycle& c);

// Evaluation context for the Noether form of one Killing symmetry on a
// CMC-H surface (H = 0 for minimal).
struct NoetherContext {
  AmbientSpace space = AmbientSpace::sol3();
  double H = 0.0;
  SurfacePatch surface;
  SymmetryId symmetry = SymmetryId::Translation3;
  // Optional gauge term added to the potential vector (coordinate
  // components); fluxes must not depend on it when it is a gradient.
  VectorField gauge;
};

NoetherContext make_context(const AmbientSpace& space, double H,
                            const SurfacePatch& surface, SymmetryId symmetry);

// Numerical validation curl F = S at a few surface points; the CMC part
// of a context is usable only when this passes.
bool potential_available(const AmbientSpace& space, SymmetryId which,
                         const std::vector<Point>& at, double tol = 1e-4);

// Minimal part <S, *df(w)> of the Noether form.
double noether_minimal_part(const NoetherContext& ctx, double u, double v,
                            const Vec2& w);
// CMC part <F, df(w)>.
double noether_cmc_part(const NoetherContext& ctx, double u, double v, const Vec2& w);
// Full restricted form <S, *df(w)> - 2H <F, df(w)>; never evaluates the
// potential vector when H = 0.
double noether_form_value(const NoetherContext& ctx, double u, double v, const Vec2& w);

// Flux: trapezoid quadrature of the Noether form along the cycle.
double flux(const NoetherContext& ctx, const Cycle& cycle);

// Flux with the sample-doubling convergence test; throws NonConvergent
// when doubling at n_max still moves the value by more than tol.
double flux_checked(const NoetherContext& ctx, const Cycle& cycle,
                    double tol = 1e-9, int n_max = 1 << 15);

// Fluxes of all valid symmetries; sigmaR is absent exactly for Sol3.
struct FluxReport {
  double sigma1 = 0.0, sigma2 = 0.0, sigma3 = 0.0;
  std::optional<double> sigmaR;
  int n = 0;
  std::string cycle_id;
  double H = 0.0;

  std::optional<double> get(SymmetryId which) const;
};

FluxReport flux_report(const AmbientSpace& space, double H, const SurfacePatch& surface,
                       const Cycle& cycle);

// Max pairwise flux difference over cycles the caller declares homologous.
double homological_invariance(const NoetherContext& ctx,
                              const std::vector<Cycle>& cycles);

// Pullback of the Noether form to the congruent immersion S'(t) . f,
// evaluated on the original surface data:
//   <dS'(t)^{-1} S(S'(t) p), *df(w)> - 2H <dS'(t)^{-1} F(S'(t) p), df(w)>.
double transformed_minimal_part(const NoetherContext& ctx, const IsometryAction& action,
                                double u, double v, const Vec2& w);
double transformed_cmc_part(const NoetherContext& ctx, const IsometryAction& action,
                            double u, double v, const Vec2& w);
double transformed_form_value(const NoetherContext& ctx, const IsometryAction& action,
                              double u, double v, const Vec2& w);

// One linear rule mu_form(S_action(t)) = sum coef_k(t) mu_k. Rules whose
// action is a Moebius-parametrized translation take the flow parameter
// and convert internally. flux_level marks rows that hold for fluxes of
// the full form; the E^3(kappa, 0) mu_3 row descends to fluxes only for
// minimal surfaces, its CMC part obeying a pointwise rule instead.
struct TableTerm {
  SymmetryId source;
  std::function<double(const AmbientSpace&, double)> coef;
};

struct TableRow {
  SymmetryId form;
  SymmetryId action;
  bool flux_level = true;
  std::vector<TableTerm> terms;
};

std::vector<TableRow> noether_transformation_table(const AmbientSpace& space, double H);

const TableRow& table_row(const std::vector<TableRow>& table, SymmetryId form,
                          SymmetryId action);

// Predicted flux of the pushed-forward surface from the base fluxes.
double transformation_table_predict(const AmbientSpace& space, double H,
                                    SymmetryId form, const IsometryAction& action,
                                    const FluxReport& base);

// Pointwise rule for the CMC part of mu_3 in E^3(kappa, 0); the
// prefactors are evaluated at the original surface point.
struct Mu3PointData {
  double mu3_cmc = 0.0;  // <F_3, df(w)>
  double s1_df = 0.0;    // <S_1, df(w)>
  double s2_df = 0.0;    // <S_2, df(w)>
  double lambda = 1.0;
  std::complex<double> w;
};

double mu3_cmc_transformed_predict(const AmbientSpace& space,
                                   const IsometryAction& action,
                                   const Mu3PointData& data);

// Flux combinations forced to vanish when the surface is invariant under
// the given symmetry family.
struct VanishingRelation {
  std::string name;
  std::vector<std::pair<SymmetryId, double>> combo;
};

std::vector<VanishingRelation> vanishing_by_symmetry(const AmbientSpace& space,
                                                     SymmetryId invariance);

double evaluate_relation(const VanishingRelation& rel, const FluxReport& report);

}  // namespace nflux
