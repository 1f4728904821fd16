#pragma once

// Coefficient weights phi(n) and psi(n) of the class. They are exactly the
// coefficients of the expansion
//   E(z) = 1 + sum_{n>=2} phi(n) a_n z^{n-1} + sum_{n>=1} psi(n) b_n conj(z)^n / z.

#include <cmath>
#include <string>

#include "hmclass/errors.hpp"
#include "hmclass/params.hpp"
#include "hmclass/specfn.hpp"

namespace hmclass {

/// 1 + lambda (n-1)(1 + n k)
inline double phi_bracket(int n, const ClassParams& p) {
  const double nd = static_cast<double>(n);
  return 1.0 + p.lambda() * (nd - 1.0) * (1.0 + nd * p.k());
}

/// 1 - lambda (n+1)(1 - n k); may be negative or zero.
inline double psi_bracket(int n, const ClassParams& p) {
  const double nd = static_cast<double>(n);
  return 1.0 - p.lambda() * (nd + 1.0) * (1.0 - nd * p.k());
}

/// Weight of |a_n| in the coefficient bound, n >= 2.
inline double phi(int n, const ClassParams& p) {
  if (n < 2) {
    throw DomainError("phi: index must be >= 2, got " + std::to_string(n));
  }
  return phi_bracket(n, p) * specfn::gamma_ratio(n, p.nu());
}

/// Signed weight of b_n, n >= 1. Membership sums use |psi|.
inline double psi(int n, const ClassParams& p) {
  if (n < 1) {
    throw DomainError("psi: index must be >= 1, got " + std::to_string(n));
  }
  return psi_bracket(n, p) * specfn::gamma_ratio(n, p.nu());
}

inline bool psi_degenerate(int n, const ClassParams& p) {
  return std::abs(psi(n, p)) <= kDegenerateWeight;
}

struct WeightPair {
  int n = 1;
  // At n = 1 the analytic weight is that of the normalized leading term z,
  // which is 1 for every parameter choice.
  double phi = 1.0;
  double psi_signed = 1.0;
};

inline WeightPair weights(int n, const ClassParams& p) {
  if (n < 1) {
    throw DomainError("weights: index must be >= 1, got " + std::to_string(n));
  }
  return {n, n == 1 ? 1.0 : phi(n, p), psi(n, p)};
}

}  // namespace hmclass
