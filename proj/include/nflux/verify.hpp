#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nflux/families.hpp"

namespace nflux {

// Deterministic sampling helper; the raw mt19937_64 stream is mapped to
// doubles in-house so results are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    double x = double(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * x;
  }

  Vec3 box(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width),
            uniform(-half_width, half_width)};
  }

  // Uniform in the verification box: |x_i| <= 1, and |w| <= 1 when the
  // base domain is a disk.
  Point point_in(const AmbientSpace& space) {
    if (space.is_e3() && space.kappa() < 0.0) {
      while (true) {
        double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
        if (x * x + y * y <= 1.0) return {x, y, uniform(-1.0, 1.0)};
      }
    }
    return box(1.0);
  }

 private:
  std::mt19937_64 gen_;
};

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  int samples = 0;
  std::uint64_t seed = 0;
};

CheckResult make_result(const std::string& name, double max_error, double tolerance,
                        int samples, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

// ---------------------------------------------------------------------------
// Individual checks. The optional field arguments replace the library
// field under test, so corrupted fixtures exercise the negative controls.
// ---------------------------------------------------------------------------

CheckResult check_frame_orthonormality(const AmbientSpace& space, std::uint64_t seed,
                                       int n);
CheckResult check_cross_identities(const AmbientSpace& space, std::uint64_t seed, int n);
CheckResult check_basis_roundtrip(const AmbientSpace& space, std::uint64_t seed, int n);
CheckResult check_christoffel_compatibility(const AmbientSpace& space,
                                            std::uint64_t seed, int n);
CheckResult check_curl_frame_vs_numeric(const AmbientSpace& space, std::uint64_t seed,
                                        int n);
CheckResult check_divergence_volume_field(const AmbientSpace& space, std::uint64_t seed,
                                          int n, const VectorField* corrupted = nullptr);

CheckResult check_killing_defect(const AmbientSpace& space, std::uint64_t seed, int n);
CheckResult check_field_killing_defect(const AmbientSpace& space, std::uint64_t seed,
                                       int n, const std::string& name,
                                       const VectorField& field);
CheckResult check_potential_curl(const AmbientSpace& space, std::uint64_t seed, int n,
                                 double potential_sign = 1.0);
CheckResult check_flow_consistency(const AmbientSpace& space, std::uint64_t seed, int n);
CheckResult check_group_law(const AmbientSpace& space, std::uint64_t seed, int n);
CheckResult check_isometry_metric_preservation(const AmbientSpace& space,
                                               std::uint64_t seed, int n);
CheckResult check_killing_divergence_free(const AmbientSpace& space, std::uint64_t seed,
                                          int n);

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

std::vector<CheckResult> suite_geometry(const AmbientSpace& space, std::uint64_t seed,
                                        int n);
std::vector<CheckResult> suite_fields(const AmbientSpace& space, std::uint64_t seed,
                                      int n);

enum class FamilyId { VerticalCatenoid, HorizontalCatenoid, RotationalEnd, Sol3Plane };

struct FamilySpec {
  FamilyId id = FamilyId::VerticalCatenoid;
  double param = 1.0;  // a, alpha, or beta
};

std::vector<CheckResult> suite_noether(const FamilySpec& family, std::uint64_t seed);

// Expected-failure fixtures (corrupted volume field, non-Killing field,
// mis-signed potential); these results should have passed == false.
std::vector<CheckResult> suite_negative_controls(const AmbientSpace& space,
                                                 std::uint64_t seed, int n);

// Default battery of spaces covering every formula branch.
std::vector<AmbientSpace> default_spaces();

}  // namespace nflux
