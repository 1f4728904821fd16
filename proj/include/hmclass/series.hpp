#pragma once

// Truncated harmonic series f = h + conj(g) with
//   h(z) = z + sum_{n>=2} a_n z^n,   g(z) = sum_{n>=1} b_n z^n.
// Functions are finitely supported coefficient maps; there is no implicit tail.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "hmclass/errors.hpp"
#include "hmclass/specfn.hpp"

namespace hmclass {

using Complex = std::complex<double>;

namespace detail {

inline Complex ipow(Complex base, int exponent) {
  Complex result{1.0, 0.0};
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

/// sum_m c_m w^m over a sparse map, by nested multiplication from the top
/// index down.
template <typename Map, typename CoefFn>
Complex sparse_horner(const Map& coefficients, Complex w, CoefFn coef) {
  if (coefficients.empty()) return {0.0, 0.0};
  Complex acc{0.0, 0.0};
  int previous = coefficients.rbegin()->first;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * ipow(w, previous - it->first) + coef(it->first, it->second);
    previous = it->first;
  }
  return acc * ipow(w, previous);
}

inline void check_index(int n, int min_index, const char* what) {
  if (n < min_index) {
    throw DomainError(std::string(what) + ": index " + std::to_string(n) + " below minimum " +
                      std::to_string(min_index));
  }
}

}  // namespace detail

/// Point z of the open unit disk with its polar shadow z = r e^{i theta}.
class EvalPoint {
 public:
  explicit EvalPoint(Complex z) : z_(z), r_(std::abs(z)) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(r_ < 1.0)) {
      throw DomainError("evaluation point must satisfy |z| < 1");
    }
    theta_ = r_ == 0.0 ? 0.0 : normalize_angle(std::arg(z));
  }
  EvalPoint(double re, double im) : EvalPoint(Complex{re, im}) {}

  static EvalPoint polar(double r, double theta) {
    if (!(r >= 0.0 && r < 1.0)) {
      throw DomainError("evaluation radius must lie in [0,1), got " + std::to_string(r));
    }
    EvalPoint p(std::polar(r, theta));
    p.r_ = r;
    p.theta_ = normalize_angle(theta);
    return p;
  }

  Complex z() const { return z_; }
  double r() const { return r_; }
  double theta() const { return theta_; }

 private:
  static double normalize_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;
    return t;
  }

  Complex z_;
  double r_ = 0.0;
  double theta_ = 0.0;
};

/// f = h + conj(g) with complex coefficients a_n (n >= 2) and b_n (n >= 1).
/// The coefficient of z in h is structurally 1; zero coefficients are never
/// stored.
class HarmonicFunction {
 public:
  using CoefficientMap = std::map<int, Complex>;

  HarmonicFunction() = default;
  HarmonicFunction(CoefficientMap a, CoefficientMap b) {
    for (const auto& [n, c] : a) set_a(n, c);
    for (const auto& [n, c] : b) set_b(n, c);
  }

  void set_a(int n, Complex c) { store(a_, n, 2, c, "analytic coefficient"); }
  void set_b(int n, Complex c) { store(b_, n, 1, c, "co-analytic coefficient"); }

  Complex a(int n) const { return lookup(a_, n); }
  Complex b(int n) const { return lookup(b_, n); }

  const CoefficientMap& analytic() const { return a_; }
  const CoefficientMap& coanalytic() const { return b_; }

  /// |b_1| < 1, the side condition on the normalized class.
  bool univalence_candidate() const { return std::abs(b(1)) < 1.0; }

  int max_index() const {
    int m = 1;
    if (!a_.empty()) m = std::max(m, a_.rbegin()->first);
    if (!b_.empty()) m = std::max(m, b_.rbegin()->first);
    return m;
  }

  friend bool operator==(const HarmonicFunction&, const HarmonicFunction&) = default;

 private:
  static void store(CoefficientMap& map, int n, int min_index, Complex c, const char* what) {
    detail::check_index(n, min_index, what);
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError(std::string(what) + " must be finite");
    }
    if (c == Complex{0.0, 0.0}) {
      map.erase(n);
    } else {
      map[n] = c;
    }
  }
  static Complex lookup(const CoefficientMap& map, int n) {
    auto it = map.find(n);
    return it == map.end() ? Complex{0.0, 0.0} : it->second;
  }

  CoefficientMap a_;
  CoefficientMap b_;
};

/// f(z) = z - sum |a_n| z^n + sum |b_n| conj(z)^n, stored as magnitudes.
class NegativeCoefficientForm {
 public:
  using MagnitudeMap = std::map<int, double>;

  NegativeCoefficientForm() = default;
  NegativeCoefficientForm(MagnitudeMap a_abs, MagnitudeMap b_abs) {
    for (const auto& [n, m] : a_abs) set_a_abs(n, m);
    for (const auto& [n, m] : b_abs) set_b_abs(n, m);
  }

  void set_a_abs(int n, double m) { store(a_abs_, n, 2, m, "analytic magnitude"); }
  void set_b_abs(int n, double m) { store(b_abs_, n, 1, m, "co-analytic magnitude"); }

  double a_abs(int n) const { return lookup(a_abs_, n); }
  double b_abs(int n) const { return lookup(b_abs_, n); }

  const MagnitudeMap& analytic() const { return a_abs_; }
  const MagnitudeMap& coanalytic() const { return b_abs_; }

  bool univalence_candidate() const { return b_abs(1) < 1.0; }

  HarmonicFunction to_harmonic() const {
    HarmonicFunction f;
    for (const auto& [n, m] : a_abs_) f.set_a(n, -m);
    for (const auto& [n, m] : b_abs_) f.set_b(n, m);
    return f;
  }

  friend bool operator==(const NegativeCoefficientForm&, const NegativeCoefficientForm&) = default;

 private:
  static void store(MagnitudeMap& map, int n, int min_index, double m, const char* what) {
    detail::check_index(n, min_index, what);
    if (!std::isfinite(m) || m < 0.0) {
      throw DomainError(std::string(what) + " must be a finite nonnegative real");
    }
    if (m == 0.0) {
      map.erase(n);
    } else {
      map[n] = m;
    }
  }
  static double lookup(const MagnitudeMap& map, int n) {
    auto it = map.find(n);
    return it == map.end() ? 0.0 : it->second;
  }

  MagnitudeMap a_abs_;
  MagnitudeMap b_abs_;
};

/// h(z) and g(z) separately.
inline std::pair<Complex, Complex> evaluate_parts(const HarmonicFunction& f, const EvalPoint& p) {
  const Complex z = p.z();
  const Complex tail =
      detail::sparse_horner(f.analytic(), z, [](int, Complex c) { return c; });
  const Complex h = z + tail;
  const Complex g = detail::sparse_horner(f.coanalytic(), z, [](int, Complex c) { return c; });
  return {h, g};
}

inline Complex evaluate(const HarmonicFunction& f, const EvalPoint& p) {
  const auto [h, g] = evaluate_parts(f, p);
  return h + std::conj(g);
}

/// (h'(z), g'(z)).
inline std::pair<Complex, Complex> derivatives(const HarmonicFunction& f, const EvalPoint& p) {
  const Complex z = p.z();
  // sum n c_n z^{n-1}
  auto derivative_sum = [&](const HarmonicFunction::CoefficientMap& map) {
    HarmonicFunction::CoefficientMap shifted;
    for (const auto& [n, c] : map) shifted.emplace(n - 1, static_cast<double>(n) * c);
    return detail::sparse_horner(shifted, z, [](int, Complex c) { return c; });
  };
  return {Complex{1.0, 0.0} + derivative_sum(f.analytic()), derivative_sum(f.coanalytic())};
}

/// J_f = |h'|^2 - |g'|^2; positive where f is locally sense preserving.
inline double jacobian(const HarmonicFunction& f, const EvalPoint& p) {
  const auto [dh, dg] = derivatives(f, p);
  return std::norm(dh) - std::norm(dg);
}

/// w = g'/h'.
inline Complex dilatation(const HarmonicFunction& f, const EvalPoint& p) {
  const auto [dh, dg] = derivatives(f, p);
  if (std::abs(dh) < 1e-14) {
    throw SingularityError("dilatation: h'(z) vanishes at the evaluation point");
  }
  return dg / dh;
}

/// Fractional operator: z^n -> gamma_ratio(n, nu) z^n on both h and g.
inline HarmonicFunction apply_operator(const HarmonicFunction& f, double nu) {
  if (!(nu >= 0.0 && nu < 1.0)) {
    throw DomainError("apply_operator: order must lie in [0,1), got " + std::to_string(nu));
  }
  HarmonicFunction out;
  for (const auto& [n, c] : f.analytic()) out.set_a(n, specfn::gamma_ratio(n, nu) * c);
  for (const auto& [n, c] : f.coanalytic()) out.set_b(n, specfn::gamma_ratio(n, nu) * c);
  return out;
}

}  // namespace hmclass
