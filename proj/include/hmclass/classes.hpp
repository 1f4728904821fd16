#pragma once

// Coefficient-bound membership for HM(beta, lambda, k, nu):
//   sum_{n>=2} phi(n)|a_n| + sum_{n>=1} |psi(n)||b_n| < 1 - beta
// is sufficient for general f and necessary and sufficient for the
// negative-coefficient subclass.

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hmclass/errors.hpp"
#include "hmclass/params.hpp"
#include "hmclass/series.hpp"
#include "hmclass/specfn.hpp"
#include "hmclass/weights.hpp"

namespace hmclass {

enum class Verdict {
  member_sufficient,  // general f, bound holds strictly
  member_iff,         // negative form, bound holds strictly
  non_member,         // negative form, bound fails
  boundary,           // negative form, |deficiency| within tolerance
  inconclusive,       // general f, bound does not hold; no claim either way
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::member_sufficient: return "member_sufficient";
    case Verdict::member_iff: return "member_iff";
    case Verdict::non_member: return "non_member";
    case Verdict::boundary: return "boundary";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

enum class Part { a, b };

inline std::string_view to_string(Part part) { return part == Part::a ? "a" : "b"; }

struct TermContribution {
  int n = 0;
  Part part = Part::a;
  double contribution = 0.0;
  bool unconstrained = false;  // psi(n) == 0: b_n does not enter the bound
};

struct MembershipReport {
  double deficiency = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::vector<TermContribution> per_term;
  ClassParams params;
  double tolerance = kVerdictTolerance;

  bool certified() const {
    return verdict == Verdict::member_sufficient || verdict == Verdict::member_iff;
  }
};

namespace detail {

template <typename AMap, typename BMap, typename Magnitude>
std::vector<TermContribution> contributions(const AMap& a, const BMap& b, const ClassParams& p,
                                            Magnitude magnitude) {
  std::vector<TermContribution> terms;
  terms.reserve(a.size() + b.size());
  for (const auto& [n, c] : a) {
    terms.push_back({n, Part::a, phi(n, p) * magnitude(c), false});
  }
  for (const auto& [n, c] : b) {
    const double w = std::abs(psi(n, p));
    terms.push_back({n, Part::b, w * magnitude(c), w <= kDegenerateWeight});
  }
  return terms;
}

inline double total(const std::vector<TermContribution>& terms) {
  double sum = 0.0;
  for (const auto& t : terms) sum += t.contribution;
  return sum;
}

inline std::vector<TermContribution> contributions(const HarmonicFunction& f,
                                                   const ClassParams& p) {
  return contributions(f.analytic(), f.coanalytic(), p, [](Complex c) { return std::abs(c); });
}

inline std::vector<TermContribution> contributions(const NegativeCoefficientForm& f,
                                                   const ClassParams& p) {
  return contributions(f.analytic(), f.coanalytic(), p, [](double m) { return m; });
}

}  // namespace detail

/// sum phi(n)|a_n| + sum |psi(n)||b_n|
inline double weighted_coefficient_sum(const HarmonicFunction& f, const ClassParams& p) {
  return detail::total(detail::contributions(f, p));
}
inline double weighted_coefficient_sum(const NegativeCoefficientForm& f, const ClassParams& p) {
  return detail::total(detail::contributions(f, p));
}

/// (1 - beta) minus the weighted coefficient sum; positive when the bound
/// holds strictly.
inline double coefficient_deficiency(const HarmonicFunction& f, const ClassParams& p) {
  return p.budget() - weighted_coefficient_sum(f, p);
}
inline double coefficient_deficiency(const NegativeCoefficientForm& f, const ClassParams& p) {
  return p.budget() - weighted_coefficient_sum(f, p);
}

/// One-sided certificate for general complex-coefficient f. A failed bound
/// yields `inconclusive`, never `non_member`.
inline MembershipReport is_member_sufficient(const HarmonicFunction& f, const ClassParams& p,
                                             double tolerance = kVerdictTolerance) {
  if (!f.univalence_candidate()) {
    throw DomainError("membership requires |b_1| < 1");
  }
  MembershipReport report;
  report.per_term = detail::contributions(f, p);
  report.deficiency = p.budget() - detail::total(report.per_term);
  report.verdict =
      report.deficiency > tolerance ? Verdict::member_sufficient : Verdict::inconclusive;
  report.params = p;
  report.tolerance = tolerance;
  return report;
}

/// Exact characterization on the negative-coefficient subclass.
inline MembershipReport is_member_negative_class(const NegativeCoefficientForm& f,
                                                 const ClassParams& p,
                                                 double tolerance = kVerdictTolerance) {
  if (!f.univalence_candidate()) {
    throw DomainError("membership requires |b_1| < 1");
  }
  MembershipReport report;
  report.per_term = detail::contributions(f, p);
  report.deficiency = p.budget() - detail::total(report.per_term);
  if (report.deficiency > tolerance) {
    report.verdict = Verdict::member_iff;
  } else if (report.deficiency < -tolerance) {
    report.verdict = Verdict::non_member;
  } else {
    report.verdict = Verdict::boundary;
  }
  report.params = p;
  report.tolerance = tolerance;
  return report;
}

/// Parameter specializations of the exact characterization.
enum class Specialization {
  lambda0,  // lambda = 0: Re(Omega f / z) > beta
  lambda1,  // lambda = 1
  k1,       // k = 1
  k0,       // k = 0
};

inline std::string_view to_string(Specialization s) {
  switch (s) {
    case Specialization::lambda0: return "lambda0";
    case Specialization::lambda1: return "lambda1";
    case Specialization::k1: return "k1";
    case Specialization::k0: return "k0";
  }
  return "unknown";
}

/// Weights as displayed for each specialization, written in terms of
/// n(n-1) B(n-1, 2-nu) rather than the Gamma ratio. psi keeps the sign of
/// the bracket inside the displayed absolute value.
inline WeightPair specialized_weights(Specialization variant, int n, const ClassParams& p) {
  if (n < 1) {
    throw DomainError("specialized_weights: index must be >= 1, got " + std::to_string(n));
  }
  const double lambda = p.lambda();
  const double k = p.k();
  const double nd = static_cast<double>(n);
  const double beta_form = specfn::beta_form_ratio(n, p.nu());

  double phi_bracket_value = 1.0;
  double psi_bracket_value = 1.0;
  switch (variant) {
    case Specialization::lambda0:
      if (lambda != 0.0) throw MismatchError("lambda0 specialization requires lambda = 0");
      phi_bracket_value = 1.0;
      psi_bracket_value = 1.0;
      break;
    case Specialization::lambda1:
      if (lambda != 1.0) throw MismatchError("lambda1 specialization requires lambda = 1");
      phi_bracket_value = nd * (1.0 - k + nd * k);
      psi_bracket_value = nd * (nd * k + k - 1.0);
      break;
    case Specialization::k1:
      if (k != 1.0) throw MismatchError("k1 specialization requires k = 1");
      phi_bracket_value = 1.0 + lambda * (nd * nd - 1.0);
      psi_bracket_value = phi_bracket_value;
      break;
    case Specialization::k0:
      if (k != 0.0) throw MismatchError("k0 specialization requires k = 0");
      phi_bracket_value = 1.0 + lambda * (nd - 1.0);
      psi_bracket_value = 1.0 - lambda * (nd + 1.0);
      break;
  }
  return {n, n == 1 ? 1.0 : phi_bracket_value * beta_form, psi_bracket_value * beta_form};
}

/// Boundary function a_n = gamma_n / phi(n), b_n = delta_n / |psi(n)| whose
/// weighted coefficient sum is exactly 1 - beta.
inline HarmonicFunction sharp_function(const ClassParams& p,
                                       const std::map<int, Complex>& gamma,
                                       const std::map<int, Complex>& delta) {
  double mass = 0.0;
  for (const auto& [n, g] : gamma) mass += std::abs(g);
  for (const auto& [n, d] : delta) mass += std::abs(d);
  if (std::abs(mass - p.budget()) > 1e-12) {
    throw WeightSumError("sharp_function: sum |gamma_n| + sum |delta_n| = " +
                         std::to_string(mass) + " must equal 1 - beta = " +
                         std::to_string(p.budget()));
  }
  HarmonicFunction f;
  for (const auto& [n, g] : gamma) f.set_a(n, g / phi(n, p));
  for (const auto& [n, d] : delta) {
    if (d == Complex{0.0, 0.0}) continue;
    const double w = std::abs(psi(n, p));
    if (w < kDegenerateWeight) {
      throw DegenerateWeightError("sharp_function: psi(" + std::to_string(n) + ") vanishes");
    }
    f.set_b(n, d / w);
  }
  return f;
}

}  // namespace hmclass
