#pragma once

// The class functional
//   E(z) = (1-lambda) F/z + lambda(1-k) F_theta/z' + lambda k F_thetatheta/z'',
// F = Omega^nu f, z = r e^{i theta}, z' = iz, z'' = -z.
// ExpandedFunctional evaluates its closed-form series; functional_E_fd
// differentiates F numerically in theta and serves as a cross-check.

#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "hmclass/errors.hpp"
#include "hmclass/params.hpp"
#include "hmclass/series.hpp"
#include "hmclass/weights.hpp"

namespace hmclass {

/// Thrown when E(0) is requested for a function with b_1 != 0: the term
/// b_1 conj(z)/z has no limit at the origin.
class UndefinedAtOriginError : public DomainError {
 public:
  UndefinedAtOriginError()
      : DomainError("functional E is undefined at the origin when b_1 != 0") {}
};

/// E(z) = 1 + sum phi(n) a_n z^{n-1} + sum psi(n) conj(b_n) conj(z)^n / z with
/// the weights computed once. The conjugate on b_n comes from f = h + conj(g);
/// for real b_n it drops out.
class ExpandedFunctional {
 public:
  ExpandedFunctional(const HarmonicFunction& f, const ClassParams& p) {
    for (const auto& [n, c] : f.analytic()) analytic_.emplace(n - 1, phi(n, p) * c);
    for (const auto& [n, c] : f.coanalytic()) coanalytic_.emplace(n - 1, psi(n, p) * std::conj(c));
    b1_nonzero_ = f.coanalytic().contains(1);
  }

  Complex operator()(const EvalPoint& point) const {
    const Complex z = point.z();
    if (point.r() == 0.0) {
      if (b1_nonzero_) throw UndefinedAtOriginError();
      return {1.0, 0.0};
    }
    const Complex zbar = std::conj(z);
    auto identity = [](int, Complex c) { return c; };
    const Complex analytic = detail::sparse_horner(analytic_, z, identity);
    // conj(z)^n / z = (conj(z)/z) conj(z)^{n-1}
    const Complex coanalytic = (zbar / z) * detail::sparse_horner(coanalytic_, zbar, identity);
    return Complex{1.0, 0.0} + analytic + coanalytic;
  }

 private:
  std::map<int, Complex> analytic_;    // n-1 -> phi(n) a_n
  std::map<int, Complex> coanalytic_;  // n-1 -> psi(n) conj(b_n)
  bool b1_nonzero_ = false;
};

inline Complex functional_E(const HarmonicFunction& f, const ClassParams& p,
                            const EvalPoint& z) {
  return ExpandedFunctional(f, p)(z);
}

inline constexpr double kDefaultThetaStep = 1e-4;

/// E(z) from its defining mixture with the theta-derivatives of Omega^nu f
/// taken by five-point central differences at fixed r.
inline Complex functional_E_fd(const HarmonicFunction& f, const ClassParams& p,
                               const EvalPoint& z, double step = kDefaultThetaStep) {
  if (!(z.r() > 0.0)) {
    throw DomainError("functional_E_fd: requires 0 < |z| < 1");
  }
  if (!(step > 0.0 && step <= 1e-3)) {
    throw DomainError("functional_E_fd: step must lie in (0, 1e-3], got " + std::to_string(step));
  }
  const HarmonicFunction transformed = apply_operator(f, p.nu());
  const double r = z.r();
  const double theta = z.theta();
  auto F = [&](double t) { return evaluate(transformed, EvalPoint::polar(r, t)); };

  const Complex fm2 = F(theta - 2.0 * step);
  const Complex fm1 = F(theta - step);
  const Complex f0 = F(theta);
  const Complex fp1 = F(theta + step);
  const Complex fp2 = F(theta + 2.0 * step);

  const Complex d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * step);
  const Complex d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * step * step);

  const Complex zc = std::polar(r, theta);
  const Complex z1 = Complex{0.0, 1.0} * zc;  // d/dtheta of r e^{i theta}
  const Complex z2 = -zc;                     // second theta-derivative

  const double lambda = p.lambda();
  const double k = p.k();
  return (1.0 - lambda) * f0 / zc + lambda * (1.0 - k) * d1 / z1 + lambda * k * d2 / z2;
}

}  // namespace hmclass
