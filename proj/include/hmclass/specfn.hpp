#pragma once

// Gamma/Beta kernel. Everything is evaluated in the log domain so that
// Gamma(n+1) never has to be formed explicitly.

#include <cmath>
#include <string>

#include "hmclass/errors.hpp"

namespace hmclass::specfn {

/// ln Gamma(x) for x > 0.
///
/// Delegates to the C library. glibc's implementation is within a few ulp
/// on (0, 200]; tests/specfn_test.cpp pins it against 30-digit reference
/// values at 1e-13 relative.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be a finite positive real, got " +
                      std::to_string(x));
  }
#if defined(__GLIBC__) || defined(__APPLE__)
  int sign = 0;
  return ::lgamma_r(x, &sign);  // reentrant: does not touch signgam
#else
  return std::lgamma(x);
#endif
}

/// Gamma(2-nu) Gamma(n+1) / Gamma(n+1-nu): the factor the fractional
/// operator applies to the coefficient of z^n.
inline double gamma_ratio(int n, double nu) {
  if (n < 1) {
    throw DomainError("gamma_ratio: index must be >= 1, got " + std::to_string(n));
  }
  if (!(nu >= 0.0 && nu < 1.0)) {
    throw DomainError("gamma_ratio: order must lie in [0,1), got " + std::to_string(nu));
  }
  const double np1 = static_cast<double>(n) + 1.0;
  // Summation order keeps nu = 0 and n = 1 exactly 1: the two equal
  // log-gamma terms cancel before anything else is added.
  const double log_ratio = (log_gamma(2.0 - nu) - log_gamma(np1 - nu)) + log_gamma(np1);
  return std::exp(log_ratio);
}

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b).
inline double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("beta: arguments must be positive");
  }
  // Symmetric in (a, b) by construction of the sum.
  const double lo = a < b ? a : b;
  const double hi = a < b ? b : a;
  return std::exp(log_gamma(lo) + log_gamma(hi) - log_gamma(a + b));
}

/// n(n-1) B(n-1, 2-nu), the Beta-function form of gamma_ratio. At n = 1 the
/// literal product is 0 * inf; the limit n Gamma(n) Gamma(2-nu)/Gamma(n+1-nu)
/// is used there, which equals 1.
inline double beta_form_ratio(int n, double nu) {
  if (n < 1) {
    throw DomainError("beta_form_ratio: index must be >= 1, got " + std::to_string(n));
  }
  if (!(nu >= 0.0 && nu < 1.0)) {
    throw DomainError("beta_form_ratio: order must lie in [0,1), got " + std::to_string(nu));
  }
  if (n == 1) {
    return std::exp(log_gamma(2.0 - nu) - log_gamma(2.0 - nu));
  }
  const double nd = static_cast<double>(n);
  return nd * (nd - 1.0) * beta(nd - 1.0, 2.0 - nu);
}

}  // namespace hmclass::specfn
