#pragma once

#include <stdexcept>
#include <string>

namespace nflux {

enum class ErrorKind {
  PointOutsideDomain,
  BasePointMismatch,
  InvalidSymmetry,
  DegenerateImmersion,
  ParamOutsideDomain,
  PotentialUnavailable,
  MissingBaseFlux,
  TableRowUnavailable,
  SolverFailure,
  NonPositiveNeck,
  NoBracket,
  PeriodNotFound,
  NonConvergent,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nflux
