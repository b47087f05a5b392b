// Command-line front end: flux computation, verification suites, and
// profile CSV export, driven by JSON configs for reproducibility.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "nflux/config.hpp"
#include "nflux/verify.hpp"
#include "nflux/version.hpp"

namespace {

using namespace nflux;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalFailure = 3;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ConfigError:
    case ErrorKind::InvalidSymmetry:
      return kExitConfigError;
    default:
      return kExitNumericalFailure;
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::ConfigError, "cannot write output file '" + path + "'");
  }
  out << text;
}

struct CommonOpts {
  std::string config_path;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int n_samples = 0;
  bool strict = false;
};

int run_flux(const CommonOpts& opts) {
  RunConfig config = parse_config_file(opts.config_path);
  if (opts.seed_set) config.seed = opts.seed;
  if (opts.n_samples > 0) config.n_samples = opts.n_samples;
  if (!opts.out.empty()) config.out = opts.out;

  BuiltSurface surface = build_surface(config);
  std::vector<SymmetryId> selected =
      selected_symmetries(surface.space, config.symmetries);

  std::vector<FluxReport> reports;
  for (const CycleConfig& cc : config.cycles) {
    Cycle cycle = build_cycle(surface, cc, config.n_samples);
    reports.push_back(flux_report(surface.space, surface.H, surface.patch, cycle));
  }
  Json out = flux_report_to_json(config, surface, reports);
  if (!config.symmetries.empty()) {
    std::set<std::string> keep;
    for (SymmetryId id : selected) {
      switch (id) {
        case SymmetryId::Translation1: keep.insert("sigma1"); break;
        case SymmetryId::Translation2: keep.insert("sigma2"); break;
        case SymmetryId::Translation3: keep.insert("sigma3"); break;
        case SymmetryId::Rotation: keep.insert("sigmaR"); break;
      }
    }
    for (auto& rec : out["records"]) {
      for (const char* key : {"sigma1", "sigma2", "sigma3", "sigmaR"}) {
        if (!keep.count(key) && rec.contains(key)) rec.erase(key);
      }
    }
  }
  write_text(config.out, json_to_text(out));
  return kExitOk;
}

void print_checks(const std::string& title, const std::vector<CheckResult>& checks) {
  std::printf("== %s\n", title.c_str());
  for (const CheckResult& c : checks) {
    std::printf("  %-34s %s  max_error=%.3e  tol=%.1e\n", c.name.c_str(),
                c.passed ? "pass" : "FAIL", c.max_error, c.tolerance);
  }
}

Json checks_to_json(const std::string& suite, const std::string& subject,
                    const std::vector<CheckResult>& checks) {
  Json out;
  out["suite"] = suite;
  out["subject"] = subject;
  out["passed"] = all_passed(checks);
  Json arr = Json::array();
  for (const CheckResult& c : checks) {
    arr.push_back({{"name", c.name},
                   {"max_error", c.max_error},
                   {"tolerance", c.tolerance},
                   {"passed", c.passed},
                   {"samples", c.samples},
                   {"seed", c.seed}});
  }
  out["checks"] = arr;
  return out;
}

int run_verify(const std::string& suite, const std::string& out_path,
               std::uint64_t seed, int n) {
  bool ok = true;
  Json report;
  report["version"] = kVersion;
  report["seed"] = seed;
  Json suites = Json::array();

  auto run_suite = [&](const std::string& name, const std::string& subject,
                       const std::vector<CheckResult>& checks) {
    print_checks(name + " / " + subject, checks);
    suites.push_back(checks_to_json(name, subject, checks));
    ok = ok && all_passed(checks);
  };

  bool all = suite.empty() || suite == "all";
  if (all || suite == "geometry") {
    for (const AmbientSpace& space : default_spaces()) {
      run_suite("geometry", space.name(), suite_geometry(space, seed, n));
    }
  }
  if (all || suite == "fields") {
    for (const AmbientSpace& space : default_spaces()) {
      run_suite("fields", space.name(), suite_fields(space, seed, n));
    }
  }
  if (all || suite == "noether") {
    run_suite("noether", "nil3 vertical catenoid a=1",
              suite_noether({FamilyId::VerticalCatenoid, 1.0}, seed));
    run_suite("noether", "nil3 horizontal catenoid alpha=1",
              suite_noether({FamilyId::HorizontalCatenoid, 1.0}, seed));
    run_suite("noether", "h2xr rotational end beta=0.5",
              suite_noether({FamilyId::RotationalEnd, 0.5}, seed));
    run_suite("noether", "sol3 horizontal plane",
              suite_noether({FamilyId::Sol3Plane, 0.0}, seed));
  }
  if (suite == "negative") {
    // Corrupted fixtures: these checks are expected to FAIL, so the
    // command exits nonzero when the suites behave correctly.
    for (const AmbientSpace& space : {AmbientSpace::nil3(), AmbientSpace::sol3()}) {
      run_suite("negative", space.name(), suite_negative_controls(space, seed, n));
    }
  }
  report["suites"] = suites;
  report["passed"] = ok;
  if (!out_path.empty()) write_text(out_path, json_to_text(report));
  std::printf("verify: %s\n", ok ? "all checks passed" : "FAILURES present");
  return ok ? kExitOk : kExitVerifyFailure;
}

int run_profile(const std::string& family, double a, double T, double alpha,
                double beta, double r_lo, double r_hi, int rows,
                const std::string& out_path) {
  std::string csv;
  if (family == "catenoid") {
    csv = catenoid_csv(catenoid_profile(a, T), rows);
  } else if (family == "dh") {
    csv = dh_csv(*nil_horizontal_catenoid(alpha).data, rows);
  } else if (family == "h2r") {
    csv = h2r_csv(h2r_profile(beta, 1e-13, r_lo, r_hi), rows);
  } else {
    throw Error(ErrorKind::ConfigError,
                "unknown profile family '" + family + "' (catenoid, dh, h2r)");
  }
  write_text(out_path, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noether flux/torque invariants of CMC surfaces in E3(kappa, tau) "
               "and Sol3"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  CommonOpts opts;

  CLI::App* flux_cmd = app.add_subcommand("flux", "compute a flux report");
  flux_cmd->add_option("--config", opts.config_path, "JSON config path")->required();
  flux_cmd->add_option("--out", opts.out, "report output path (default: config's out "
                                          "or stdout)");
  auto* seed_opt = flux_cmd->add_option("--seed", opts.seed, "seed override");
  flux_cmd->add_option("--n-samples", opts.n_samples, "quadrature samples override");
  flux_cmd->add_flag("--strict", opts.strict,
                     "strict config parsing (always on; flag kept for scripts)");

  std::string suite, verify_out;
  std::uint64_t verify_seed = 12345;
  int verify_n = 100;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite,
                         "suite name: geometry, fields, noether, negative, all");
  verify_cmd->add_option("--out", verify_out, "JSON report path");
  verify_cmd->add_option("--seed", verify_seed, "sampling seed");
  verify_cmd->add_option("--n-samples", verify_n, "sample count per check");

  std::string family, profile_out;
  double a = 1.0, T = 2.0, alpha = 1.0, beta = 1.0, r_lo = 0.55, r_hi = 0.95;
  int rows = 201;
  CLI::App* profile_cmd =
      app.add_subcommand("profile", "export family profile data as CSV");
  profile_cmd->add_option("family", family, "catenoid | dh | h2r")->required();
  profile_cmd->add_option("--a", a, "catenoid neck size");
  profile_cmd->add_option("--T", T, "catenoid half-length");
  profile_cmd->add_option("--alpha", alpha, "horizontal catenoid parameter");
  profile_cmd->add_option("--beta", beta, "rotational end parameter");
  profile_cmd->add_option("--r-lo", r_lo, "inner radius");
  profile_cmd->add_option("--r-hi", r_hi, "outer radius");
  profile_cmd->add_option("--rows", rows, "CSV row count");
  profile_cmd->add_option("--out", profile_out, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (flux_cmd->parsed()) {
      opts.seed_set = seed_opt->count() > 0;
      return run_flux(opts);
    }
    if (verify_cmd->parsed()) {
      return run_verify(suite, verify_out, verify_seed, verify_n);
    }
    if (profile_cmd->parsed()) {
      return run_profile(family, a, T, alpha, beta, r_lo, r_hi, rows, profile_out);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumericalFailure;
  }
  return kExitOk;
}
