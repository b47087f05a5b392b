#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nflux/families.hpp"

namespace nflux {

using Json = nlohmann::json;

struct SpaceConfig {
  bool present = false;
  std::string kind;  // "e3" | "sol3"
  double kappa = 0.0;
  double tau = 0.0;
};

struct SurfaceConfig {
  std::string family;  // family name or "chart"
  double a = 1.0, T = 2.0;
  double alpha = 1.0;
  double beta = 0.5;
  double r_lo = 0.55, r_hi = 0.95;
  // Inline chart over the expression grammar, variables (u, v).
  std::string x1, x2, x3;
  std::array<double, 4> domain = {0.0, 1.0, 0.0, 1.0};
  std::array<bool, 2> periodic = {false, false};
  std::array<double, 2> period = {0.0, 0.0};
  double H = 0.0;
};

struct CycleConfig {
  std::string id;
  std::optional<double> level;  // the family's natural homology generator
  std::string u_expr, v_expr;   // expression curve in s otherwise
  int samples = 0;              // 0: global default
};

struct RunConfig {
  SpaceConfig space;
  SurfaceConfig surface;
  std::vector<CycleConfig> cycles;
  std::vector<std::string> symmetries;  // empty: all valid for the space
  int n_samples = 2048;
  std::uint64_t seed = 12345;
  std::string out;
  Json echo;
};

RunConfig parse_config_json(const Json& j);
// Reads and parses a config file; malformed JSON fails with a
// line/column diagnostic, unknown keys are rejected.
RunConfig parse_config_file(const std::string& path);

struct BuiltSurface {
  AmbientSpace space = AmbientSpace::sol3();
  double H = 0.0;
  SurfacePatch patch;
  std::function<Cycle(double level, int n)> level_cycle;  // may be null
};

BuiltSurface build_surface(const RunConfig& config);

Cycle build_cycle(const BuiltSurface& surface, const CycleConfig& cycle, int default_n);

// Which symmetries a run computes; validates names against the space.
std::vector<SymmetryId> selected_symmetries(const AmbientSpace& space,
                                            const std::vector<std::string>& names);

std::string flux_sign_convention();

Json flux_report_to_json(const RunConfig& config, const BuiltSurface& surface,
                         const std::vector<FluxReport>& reports);

std::string json_to_text(const Json& j);

}  // namespace nflux
