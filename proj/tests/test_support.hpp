#pragma once

#include <cmath>
#include <complex>

namespace hmclass::testing {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

/// Gamma(2-nu) Gamma(n+1)/Gamma(n+1-nu) as the finite product
/// prod_{j=2}^{n} j/(j - nu); no Gamma evaluation involved.
inline double gamma_ratio_product(int n, double nu) {
  double r = 1.0;
  for (int j = 2; j <= n; ++j) r *= j / (j - nu);
  return r;
}

}  // namespace hmclass::testing
