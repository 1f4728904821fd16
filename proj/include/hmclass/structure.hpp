#pragma once

// Extreme points, convolution and convex combination on the closed
// negative-coefficient class.

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "hmclass/classes.hpp"
#include "hmclass/errors.hpp"
#include "hmclass/params.hpp"
#include "hmclass/series.hpp"
#include "hmclass/weights.hpp"

namespace hmclass {

inline constexpr double kWeightTolerance = 1e-12;

/// Convex weights of a function over {z, f_n (n >= 2), g_n (n >= 1)}.
struct WeightDecomposition {
  double t1 = 1.0;
  std::map<int, double> t;
  std::map<int, double> s;

  double total() const {
    double sum = t1;
    for (const auto& [n, w] : t) sum += w;
    for (const auto& [n, w] : s) sum += w;
    return sum;
  }

  void validate() const {
    auto nonnegative = [](double w) { return std::isfinite(w) && w >= -1e-15; };
    bool ok = nonnegative(t1);
    for (const auto& [n, w] : t) ok = ok && n >= 2 && nonnegative(w);
    for (const auto& [n, w] : s) ok = ok && n >= 1 && nonnegative(w);
    if (!ok) throw WeightSumError("decomposition weights must be nonnegative with valid indices");
    if (std::abs(total() - 1.0) > kWeightTolerance) {
      throw WeightSumError("decomposition weights sum to " + std::to_string(total()) +
                           ", expected 1");
    }
  }
};

/// f_n(z) = z - (1-beta)/phi(n) z^n
inline NegativeCoefficientForm extreme_point_f(int n, const ClassParams& p) {
  if (n < 2) throw DomainError("extreme_point_f: index must be >= 2, got " + std::to_string(n));
  NegativeCoefficientForm f;
  f.set_a_abs(n, p.budget() / phi(n, p));
  return f;
}

/// g_n(z) = z + (1-beta)/|psi(n)| conj(z)^n. For n = 1 the coefficient can
/// reach 1; the result then reports univalence_candidate() == false.
inline NegativeCoefficientForm extreme_point_g(int n, const ClassParams& p) {
  if (n < 1) throw DomainError("extreme_point_g: index must be >= 1, got " + std::to_string(n));
  const double w = std::abs(psi(n, p));
  if (w <= kDegenerateWeight) {
    throw DegenerateWeightError("extreme_point_g: psi(" + std::to_string(n) + ") vanishes for " +
                                p.to_string());
  }
  NegativeCoefficientForm g;
  g.set_b_abs(n, p.budget() / w);
  return g;
}

/// Weights t_n = phi|a_n|/(1-beta), s_n = |psi||b_n|/(1-beta), t1 = 1 - rest.
/// Accepts the closed class (sum <= 1 - beta) so extreme points decompose.
inline WeightDecomposition decompose(const NegativeCoefficientForm& f, const ClassParams& p) {
  const double budget = p.budget();
  WeightDecomposition w;
  double used = 0.0;
  for (const auto& [n, m] : f.analytic()) {
    const double tn = phi(n, p) * m / budget;
    w.t[n] = tn;
    used += tn;
  }
  for (const auto& [n, m] : f.coanalytic()) {
    const double weight = std::abs(psi(n, p));
    if (weight <= kDegenerateWeight) {
      throw DegenerateWeightError("decompose: b_" + std::to_string(n) +
                                  " is nonzero but psi vanishes");
    }
    const double sn = weight * m / budget;
    w.s[n] = sn;
    used += sn;
  }
  if (used > 1.0 + kWeightTolerance / budget) {
    throw MembershipError("decompose: weighted coefficient sum exceeds 1 - beta");
  }
  w.t1 = used > 1.0 ? 0.0 : 1.0 - used;
  return w;
}

/// t1 z + sum t_n f_n + sum s_n g_n in coefficient form.
inline NegativeCoefficientForm reconstruct(const WeightDecomposition& w, const ClassParams& p) {
  w.validate();
  const double budget = p.budget();
  NegativeCoefficientForm f;
  for (const auto& [n, tn] : w.t) {
    if (tn > 0.0) f.set_a_abs(n, budget / phi(n, p) * tn);
  }
  for (const auto& [n, sn] : w.s) {
    if (!(sn > 0.0)) continue;
    const double weight = std::abs(psi(n, p));
    if (weight <= kDegenerateWeight) {
      throw DegenerateWeightError("reconstruct: psi(" + std::to_string(n) + ") vanishes");
    }
    f.set_b_abs(n, budget / weight * sn);
  }
  return f;
}

/// Hadamard product on magnitudes: |a_n c_n| and |b_n d_n|.
inline NegativeCoefficientForm convolve(const NegativeCoefficientForm& f1,
                                        const NegativeCoefficientForm& f2) {
  NegativeCoefficientForm out;
  for (const auto& [n, m] : f1.analytic()) out.set_a_abs(n, m * f2.a_abs(n));
  for (const auto& [n, m] : f1.coanalytic()) out.set_b_abs(n, m * f2.b_abs(n));
  return out;
}

struct ConvolutionReport {
  bool hypothesis_ok = false;
  std::string violation;
  double alpha = 0.0;
  double beta = 0.0;
  double factor1_deficiency = 0.0;  // at level alpha
  double factor2_deficiency = 0.0;  // at level alpha
  std::optional<NegativeCoefficientForm> product;
  double product_deficiency_alpha = 0.0;
  double product_deficiency_beta = 0.0;

  /// Product lies in the class at level alpha and therefore at level beta.
  bool closure_holds() const {
    return hypothesis_ok && product_deficiency_alpha > 0.0 && product_deficiency_beta > 0.0;
  }
};

/// Checks that f1 * f2 stays in the class at level alpha (and hence at the
/// lower level beta) when both factors are members at level alpha and the
/// second factor has all magnitudes below 1. The beta field of `shape` is
/// ignored; only lambda, k and nu are used. `strict` extends the magnitude
/// hypothesis to f1.
inline ConvolutionReport check_convolution_closure(const NegativeCoefficientForm& f1,
                                                   const NegativeCoefficientForm& f2,
                                                   double alpha, double beta,
                                                   const ClassParams& shape,
                                                   bool strict = false) {
  if (!(beta >= 0.0 && beta < alpha && alpha < 1.0)) {
    throw DomainError("convolution closure requires 0 <= beta < alpha < 1");
  }
  const ClassParams at_alpha = shape.at_level(alpha);
  const ClassParams at_beta = shape.at_level(beta);

  ConvolutionReport report;
  report.alpha = alpha;
  report.beta = beta;
  report.factor1_deficiency = coefficient_deficiency(f1, at_alpha);
  report.factor2_deficiency = coefficient_deficiency(f2, at_alpha);

  auto below_one = [](const NegativeCoefficientForm& f) {
    for (const auto& [n, m] : f.analytic()) if (m >= 1.0) return false;
    for (const auto& [n, m] : f.coanalytic()) if (m >= 1.0) return false;
    return true;
  };

  if (!below_one(f2)) {
    report.violation = "second factor has a coefficient magnitude >= 1";
  } else if (strict && !below_one(f1)) {
    report.violation = "first factor has a coefficient magnitude >= 1 (strict mode)";
  } else if (!f1.univalence_candidate() || !f2.univalence_candidate()) {
    report.violation = "a factor has |b_1| >= 1";
  } else if (!(report.factor1_deficiency > 0.0)) {
    report.violation = "first factor is not in the class at level alpha";
  } else if (!(report.factor2_deficiency > 0.0)) {
    report.violation = "second factor is not in the class at level alpha";
  }
  if (!report.violation.empty()) return report;

  report.hypothesis_ok = true;
  report.product = convolve(f1, f2);
  report.product_deficiency_alpha = coefficient_deficiency(*report.product, at_alpha);
  report.product_deficiency_beta = coefficient_deficiency(*report.product, at_beta);
  return report;
}

/// sum_i t_i f_i with t_i >= 0 summing to 1.
inline NegativeCoefficientForm convex_combine(std::span<const NegativeCoefficientForm> fs,
                                              std::span<const double> ts) {
  if (fs.size() != ts.size() || fs.empty()) {
    throw WeightSumError("convex_combine: need one weight per function and at least one function");
  }
  double total = 0.0;
  for (double t : ts) {
    if (!std::isfinite(t) || t < 0.0) {
      throw WeightSumError("convex_combine: weights must be nonnegative");
    }
    total += t;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw WeightSumError("convex_combine: weights sum to " + std::to_string(total));
  }
  std::map<int, double> a;
  std::map<int, double> b;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (const auto& [n, m] : fs[i].analytic()) a[n] += ts[i] * m;
    for (const auto& [n, m] : fs[i].coanalytic()) b[n] += ts[i] * m;
  }
  return {a, b};
}

}  // namespace hmclass
