#include "nflux/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "nflux/expr.hpp"
#include "nflux/version.hpp"

namespace nflux {

namespace {

[[noreturn]] void config_fail(const std::string& message) {
  throw Error(ErrorKind::ConfigError, message);
}

void reject_unknown_keys(const Json& j, const std::set<std::string>& known,
                         const std::string& where) {
  if (!j.is_object()) config_fail(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) config_fail("unknown key '" + key + "' in " + where);
  }
}

double get_number(const Json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) config_fail("'" + key + "' must be a number");
  return j[key].get<double>();
}

std::string get_string(const Json& j, const std::string& key,
                       const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) config_fail("'" + key + "' must be a string");
  return j[key].get<std::string>();
}

SpaceConfig parse_space(const Json& j) {
  SpaceConfig out;
  out.present = true;
  reject_unknown_keys(j, {"kind", "kappa", "tau"}, "space");
  out.kind = get_string(j, "kind", "");
  if (out.kind != "e3" && out.kind != "sol3") {
    config_fail("space.kind must be 'e3' or 'sol3'");
  }
  out.kappa = get_number(j, "kappa", 0.0);
  out.tau = get_number(j, "tau", 0.0);
  return out;
}

SurfaceConfig parse_surface(const Json& j) {
  SurfaceConfig out;
  reject_unknown_keys(j,
                      {"family", "a", "T", "alpha", "beta", "r_lo", "r_hi", "x1", "x2",
                       "x3", "domain", "periodic", "period", "H"},
                      "surface");
  out.family = get_string(j, "family", "");
  if (out.family.empty()) config_fail("surface.family is required");
  out.a = get_number(j, "a", out.a);
  out.T = get_number(j, "T", out.T);
  out.alpha = get_number(j, "alpha", out.alpha);
  out.beta = get_number(j, "beta", out.beta);
  out.r_lo = get_number(j, "r_lo", out.r_lo);
  out.r_hi = get_number(j, "r_hi", out.r_hi);
  out.H = get_number(j, "H", out.H);
  out.x1 = get_string(j, "x1", "");
  out.x2 = get_string(j, "x2", "");
  out.x3 = get_string(j, "x3", "");
  if (j.contains("domain")) {
    if (!j["domain"].is_array() || j["domain"].size() != 4) {
      config_fail("surface.domain must be [u_min, u_max, v_min, v_max]");
    }
    for (int i = 0; i < 4; ++i) out.domain[i] = j["domain"][i].get<double>();
  }
  if (j.contains("periodic")) {
    if (!j["periodic"].is_array() || j["periodic"].size() != 2) {
      config_fail("surface.periodic must be [bool, bool]");
    }
    for (int i = 0; i < 2; ++i) out.periodic[i] = j["periodic"][i].get<bool>();
  }
  if (j.contains("period")) {
    if (!j["period"].is_array() || j["period"].size() != 2) {
      config_fail("surface.period must be [number, number]");
    }
    for (int i = 0; i < 2; ++i) out.period[i] = j["period"][i].get<double>();
  }
  return out;
}

CycleConfig parse_cycle(const Json& j, std::size_t index) {
  CycleConfig out;
  reject_unknown_keys(j, {"id", "level", "u", "v", "n"},
                      "cycles[" + std::to_string(index) + "]");
  out.id = get_string(j, "id", "cycle" + std::to_string(index));
  if (j.contains("level")) out.level = j["level"].get<double>();
  out.u_expr = get_string(j, "u", "");
  out.v_expr = get_string(j, "v", "");
  out.samples = int(get_number(j, "n", 0.0));
  bool has_exprs = !out.u_expr.empty() && !out.v_expr.empty();
  if (out.level.has_value() == has_exprs) {
    config_fail("each cycle needs either 'level' or both 'u' and 'v' expressions");
  }
  return out;
}

}  // namespace

RunConfig parse_config_json(const Json& j) {
  RunConfig out;
  out.echo = j;
  reject_unknown_keys(
      j, {"space", "surface", "cycles", "symmetries", "n_samples", "seed", "out"},
      "config");
  if (j.contains("space")) out.space = parse_space(j["space"]);
  if (!j.contains("surface")) config_fail("config requires a 'surface' object");
  out.surface = parse_surface(j["surface"]);
  if (j.contains("cycles")) {
    if (!j["cycles"].is_array()) config_fail("'cycles' must be an array");
    for (std::size_t i = 0; i < j["cycles"].size(); ++i) {
      out.cycles.push_back(parse_cycle(j["cycles"][i], i));
    }
  }
  if (j.contains("symmetries")) {
    if (!j["symmetries"].is_array()) config_fail("'symmetries' must be an array");
    for (const auto& s : j["symmetries"]) {
      if (!s.is_string()) config_fail("symmetry names must be strings");
      out.symmetries.push_back(s.get<std::string>());
    }
  }
  out.n_samples = int(get_number(j, "n_samples", 2048));
  if (out.n_samples < 8) config_fail("n_samples must be at least 8");
  double seed = get_number(j, "seed", 12345.0);
  out.seed = std::uint64_t(seed);
  out.out = get_string(j, "out", "");
  return out;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_fail("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    config_fail("malformed JSON in '" + path + "' at line " + std::to_string(line) +
                ", column " + std::to_string(col) + ": " + e.what());
  }
  return parse_config_json(j);
}

namespace {

AmbientSpace space_from_config(const SpaceConfig& sc) {
  if (sc.kind == "sol3") return AmbientSpace::sol3();
  return AmbientSpace::e3(sc.kappa, sc.tau);
}

void check_space_matches(const SpaceConfig& sc, const AmbientSpace& implied,
                         const std::string& family) {
  if (!sc.present) return;
  AmbientSpace from_config = space_from_config(sc);
  bool same = from_config.kind() == implied.kind() &&
              std::abs(from_config.kappa() - implied.kappa()) < 1e-12 &&
              std::abs(from_config.tau() - implied.tau()) < 1e-12;
  if (!same) {
    config_fail("space in config contradicts the ambient space of family '" + family +
                "' (" + implied.name() + ")");
  }
}

SurfacePatch chart_surface(const AmbientSpace& space, const SurfaceConfig& sc) {
  if (sc.x1.empty() || sc.x2.empty() || sc.x3.empty()) {
    config_fail("chart surfaces need x1, x2, x3 expressions");
  }
  std::vector<std::string> uv = {"u", "v"};
  Expression e1 = Expression::parse(sc.x1, uv);
  Expression e2 = Expression::parse(sc.x2, uv);
  Expression e3 = Expression::parse(sc.x3, uv);
  SurfacePatch patch;
  patch.space = space;
  patch.chart = [e1, e2, e3](double u, double v) -> Point {
    std::array<double, 2> vars = {u, v};
    return {e1.eval(vars), e2.eval(vars), e3.eval(vars)};
  };
  patch.u_min = sc.domain[0];
  patch.u_max = sc.domain[1];
  patch.v_min = sc.domain[2];
  patch.v_max = sc.domain[3];
  patch.periodic_u = sc.periodic[0];
  patch.periodic_v = sc.periodic[1];
  patch.period_u = sc.period[0] != 0.0 ? sc.period[0] : patch.u_max - patch.u_min;
  patch.period_v = sc.period[1] != 0.0 ? sc.period[1] : patch.v_max - patch.v_min;
  patch.name = "inline chart";
  return patch;
}

}  // namespace

BuiltSurface build_surface(const RunConfig& config) {
  const SurfaceConfig& sc = config.surface;
  BuiltSurface out;
  if (sc.family == "nil_vertical_catenoid") {
    VerticalCatenoid cat = nil_vertical_catenoid(sc.a, sc.T);
    out.space = cat.patch.space;
    out.H = 0.0;
    out.patch = cat.patch;
    out.level_cycle = [cat](double level, int n) { return cat.cycle(level, n); };
  } else if (sc.family == "nil_horizontal_catenoid") {
    HorizontalCatenoid dh = nil_horizontal_catenoid(sc.alpha);
    out.space = dh.patch.space;
    out.H = 0.0;
    out.patch = dh.patch;
    out.level_cycle = [dh](double level, int n) { return dh.cycle(level, n); };
  } else if (sc.family == "h2r_rotational_end") {
    RotationalEnd end = h2r_rotational_end(sc.beta, 1e-13, sc.r_lo, sc.r_hi);
    out.space = end.patch.space;
    out.H = 0.5;
    out.patch = end.patch;
    out.level_cycle = [end](double level, int n) { return end.cycle(level, n); };
  } else if (sc.family == "sol3_horizontal_plane") {
    out.patch = sol3_horizontal_plane();
    out.space = out.patch.space;
    out.H = 0.0;
    out.level_cycle = [](double level, int n) {
      return circle_cycle({0.0, 0.0}, level, n,
                          "circle r=" + std::to_string(level));
    };
  } else if (sc.family == "chart") {
    if (!config.space.present) config_fail("chart surfaces require a 'space' object");
    out.space = space_from_config(config.space);
    out.H = sc.H;
    out.patch = chart_surface(out.space, sc);
    return out;
  } else {
    config_fail("unknown surface family '" + sc.family + "'");
  }
  check_space_matches(config.space, out.space, sc.family);
  return out;
}

Cycle build_cycle(const BuiltSurface& surface, const CycleConfig& cycle,
                  int default_n) {
  int n = cycle.samples > 0 ? cycle.samples : default_n;
  if (cycle.level) {
    if (!surface.level_cycle) {
      config_fail("cycle '" + cycle.id + "': level cycles need a family surface");
    }
    Cycle c = surface.level_cycle(*cycle.level, n);
    if (!cycle.id.empty()) c.id = cycle.id;
    return c;
  }
  Expression ue = Expression::parse(cycle.u_expr, {"s"});
  Expression ve = Expression::parse(cycle.v_expr, {"s"});
  Cycle c;
  c.curve = [ue, ve](double s) -> Vec2 {
    std::array<double, 1> vars = {s};
    return {ue.eval(vars), ve.eval(vars)};
  };
  c.samples = n;
  c.id = cycle.id;
  return c;
}

std::vector<SymmetryId> selected_symmetries(const AmbientSpace& space,
                                            const std::vector<std::string>& names) {
  if (names.empty()) return symmetries_of(space);
  std::vector<SymmetryId> out;
  for (const std::string& name : names) {
    SymmetryId id;
    if (name == "T1" || name == "Translation1") {
      id = SymmetryId::Translation1;
    } else if (name == "T2" || name == "Translation2") {
      id = SymmetryId::Translation2;
    } else if (name == "T3" || name == "Translation3") {
      id = SymmetryId::Translation3;
    } else if (name == "R" || name == "Rotation") {
      id = SymmetryId::Rotation;
    } else {
      config_fail("unknown symmetry '" + name + "' (use T1, T2, T3, R)");
    }
    if (!symmetry_valid(space, id)) {
      config_fail("symmetry '" + name + "' is invalid in Sol3: its isometry group is "
                  "of dimension 3 (no rotation family)");
    }
    out.push_back(id);
  }
  return out;
}

std::string flux_sign_convention() {
  return "N = cross(f_u, f_v) normalized in the (u, v) order declared by the "
         "surface; cycles run in the direction of increasing s; flux signs follow "
         "these two choices";
}

Json flux_report_to_json(const RunConfig& config, const BuiltSurface& surface,
                         const std::vector<FluxReport>& reports) {
  Json out;
  out["version"] = kVersion;
  out["seed"] = config.seed;
  out["n_samples"] = config.n_samples;
  out["convention"] = flux_sign_convention();
  if (surface.space.is_sol3()) {
    out["space"] = {{"kind", "sol3"}};
  } else {
    out["space"] = {{"kind", "e3"},
                    {"kappa", surface.space.kappa()},
                    {"tau", surface.space.tau()}};
  }
  out["H"] = surface.H;
  out["surface"] = config.surface.family;
  Json records = Json::array();
  for (const FluxReport& r : reports) {
    Json rec;
    rec["cycle"] = r.cycle_id;
    rec["n"] = r.n;
    rec["sigma1"] = r.sigma1;
    rec["sigma2"] = r.sigma2;
    rec["sigma3"] = r.sigma3;
    if (r.sigmaR) rec["sigmaR"] = *r.sigmaR;
    records.push_back(rec);
  }
  out["records"] = records;
  out["config"] = config.echo;
  return out;
}

std::string json_to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nflux
