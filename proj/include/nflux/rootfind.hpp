#pragma once

#include <cmath>
#include <functional>

#include "nflux/errors.hpp"

namespace nflux {

// Bisection on a bracketing interval [lo, hi]; the endpoint values must
// have opposite signs.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double xtol = 1e-14, int max_iter = 200) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw Error(ErrorKind::NoBracket, "bisection endpoints do not bracket a root");
  }
  for (int i = 0; i < max_iter && (hi - lo) > xtol * (1.0 + std::abs(lo)); ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace nflux
