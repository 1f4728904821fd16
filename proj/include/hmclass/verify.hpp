#pragma once

// Numerical checks of the coefficient conditions on a fixed lattice of the
// disk. A passing run means "no counterexample on this grid", nothing more.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmclass/classes.hpp"
#include "hmclass/errors.hpp"
#include "hmclass/functional.hpp"
#include "hmclass/params.hpp"
#include "hmclass/random.hpp"
#include "hmclass/series.hpp"
#include "hmclass/weights.hpp"

namespace hmclass {

/// Polar lattice r_i e^{2 pi i j / A}. Points are indexed radius-major:
/// index = i * A + j.
class DiskGrid {
 public:
  DiskGrid(std::vector<double> radii, int angles, std::string tag = "custom")
      : radii_(std::move(radii)), angles_(angles), tag_(std::move(tag)) {
    if (angles_ < 8) throw DomainError("grid needs at least 8 angles");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      if (!(radii_[i] > 0.0 && radii_[i] < 1.0)) {
        throw DomainError("grid radii must lie in (0,1)");
      }
      if (i > 0 && !(radii_[i] > radii_[i - 1])) {
        throw DomainError("grid radii must be strictly increasing");
      }
    }
  }

  const std::vector<double>& radii() const { return radii_; }
  int angles() const { return angles_; }
  const std::string& tag() const { return tag_; }
  std::size_t size() const { return radii_.size() * static_cast<std::size_t>(angles_); }

  double theta(int j) const { return 2.0 * std::numbers::pi * j / angles_; }

  EvalPoint point(std::size_t index) const {
    const auto a = static_cast<std::size_t>(angles_);
    return EvalPoint::polar(radii_[index / a], theta(static_cast<int>(index % a)));
  }

 private:
  std::vector<double> radii_;
  int angles_;
  std::string tag_;
};

/// Radii {0.1, ..., 0.9, 0.95, 0.995} with 128 angles.
inline DiskGrid standard_grid() {
  return DiskGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.995}, 128,
                  "standard-v1");
}

struct GridMinimum {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
  EvalPoint where{0.0, 0.0};
};

/// Minimum of Re E over the grid; ties go to the smallest grid index.
inline GridMinimum min_real_E(const HarmonicFunction& f, const ClassParams& p,
                              const DiskGrid& grid) {
  const ExpandedFunctional E(f, p);
  GridMinimum best;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const EvalPoint z = grid.point(i);
    const double v = E(z).real();
    if (v < best.value) {
      best.value = v;
      best.index = i;
      best.where = z;
    }
  }
  return best;
}

inline constexpr int kDefaultMaxIndex = 8;
inline constexpr double kDefaultPartMix = 0.5;

/// Random member of the negative-coefficient class: a random set of terms
/// sharing a budget u (1 - beta), u uniform on (0,1). Co-analytic terms
/// whose psi vanishes are never drawn, and b_1 is kept below 1.
inline NegativeCoefficientForm random_member(const ClassParams& p, std::uint64_t seed,
                                             int max_index = kDefaultMaxIndex,
                                             double part_mix = kDefaultPartMix) {
  if (max_index < 2) throw DomainError("random_member: max_index must be >= 2");
  if (!(part_mix >= 0.0 && part_mix <= 1.0)) {
    throw DomainError("random_member: part_mix must lie in [0,1]");
  }
  Rng rng(seed);

  std::vector<int> b_candidates;
  for (int n = 1; n <= max_index; ++n) {
    if (!psi_degenerate(n, p)) b_candidates.push_back(n);
  }

  struct Term {
    Part part;
    int n;
  };
  std::vector<Term> terms;
  auto has = [&](Part part, int n) {
    return std::any_of(terms.begin(), terms.end(),
                       [&](const Term& t) { return t.part == part && t.n == n; });
  };
  const int draws = rng.integer(1, max_index);
  for (int i = 0; i < draws; ++i) {
    const bool coanalytic = rng.uniform() < part_mix && !b_candidates.empty();
    Term t = coanalytic
                 ? Term{Part::b, b_candidates[static_cast<std::size_t>(
                                     rng.integer(0, static_cast<int>(b_candidates.size()) - 1))]}
                 : Term{Part::a, rng.integer(2, max_index)};
    if (!has(t.part, t.n)) terms.push_back(t);
  }

  const double budget = rng.open_uniform() * p.budget();
  std::vector<double> shares(terms.size());
  double total = 0.0;
  for (double& s : shares) total += (s = rng.exponential());

  NegativeCoefficientForm f;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double share = budget * shares[i] / total;
    const auto [part, n] = terms[i];
    if (part == Part::a) {
      f.set_a_abs(n, share / phi(n, p));
    } else {
      double m = share / std::abs(psi(n, p));
      if (n == 1 && m >= 1.0) m = 0.99;  // only lowers the weighted sum
      f.set_b_abs(n, m);
    }
  }
  return f;
}

/// Random function violating the coefficient bound by more than 0.01: the
/// largest contribution of a random member (b_1 excluded) is inflated until
/// the deficiency reaches -0.01 - v (1 - beta), v uniform on [0.01, 1).
inline NegativeCoefficientForm random_violator(const ClassParams& p, std::uint64_t seed,
                                               int max_index = kDefaultMaxIndex,
                                               double part_mix = kDefaultPartMix) {
  NegativeCoefficientForm f = random_member(p, seed, max_index, part_mix);
  Rng rng(mix_seed(seed, 0x5107));
  const double target_sum = p.budget() + 0.01 + rng.uniform(0.01, 1.0) * p.budget();
  const double needed = target_sum - weighted_coefficient_sum(f, p);

  const auto terms = detail::contributions(f, p);
  const TermContribution* largest = nullptr;
  for (const auto& t : terms) {
    if (t.part == Part::b && (t.n == 1 || t.unconstrained)) continue;
    if (largest == nullptr || t.contribution > largest->contribution) largest = &t;
  }
  if (largest == nullptr) {
    f.set_a_abs(2, f.a_abs(2) + needed / phi(2, p));
  } else if (largest->part == Part::a) {
    f.set_a_abs(largest->n, f.a_abs(largest->n) + needed / phi(largest->n, p));
  } else {
    const int n = largest->n;
    f.set_b_abs(n, f.b_abs(n) + needed / std::abs(psi(n, p)));
  }
  return f;
}

/// Random parameters covering the whole admissible box, lambda in [0, 2].
inline ClassParams random_params(std::uint64_t seed) {
  Rng rng(seed);
  const double beta = rng.uniform(0.0, 0.95);
  const double lambda = rng.uniform(0.0, 2.0);
  const double k = rng.uniform(0.0, 1.0);
  const double nu = rng.uniform(0.0, 0.95);
  return {beta, lambda, k, nu};
}

/// Q(r) = 1 - beta - sum phi|a_n| r^{n-1} - sum |psi||b_n| r^{n-1}: the
/// value of Re E - beta on the positive real axis as used in the necessity
/// argument.
inline double radial_bound(const NegativeCoefficientForm& f, const ClassParams& p, double r) {
  double q = p.budget();
  for (const auto& [n, m] : f.analytic()) q -= phi(n, p) * m * std::pow(r, n - 1);
  for (const auto& [n, m] : f.coanalytic()) q -= std::abs(psi(n, p)) * m * std::pow(r, n - 1);
  return q;
}

/// r = 1 - 10^{-j}, j = 1..8.
inline std::vector<double> witness_radii() {
  std::vector<double> radii;
  for (int j = 1; j <= 8; ++j) radii.push_back(1.0 - std::pow(10.0, -j));
  return radii;
}

/// First r0 on the geometric approach to 1 with Q(r0) < 0. Absent when no
/// such radius exists up to 1 - 1e-8.
inline std::optional<double> find_necessity_witness(const NegativeCoefficientForm& f,
                                                    const ClassParams& p) {
  for (double r : witness_radii()) {
    if (radial_bound(f, p, r) < 0.0) return r;
  }
  return std::nullopt;
}

struct Witness {
  std::size_t case_id = 0;
  Complex z;
  double value = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::string grid_tag;
  ClassParams params;
  std::uint64_t seed = 0;
  int cases_run = 0;
  int cases_passed = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::optional<Witness> witness;

  bool all_passed() const { return cases_passed == cases_run; }
};

/// Random complex phases on the coefficients of a negative form; the
/// weighted coefficient sum is unchanged.
inline HarmonicFunction randomize_phases(const NegativeCoefficientForm& f, std::uint64_t seed) {
  Rng rng(seed);
  HarmonicFunction g;
  for (const auto& [n, m] : f.analytic()) {
    g.set_a(n, std::polar(m, rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  for (const auto& [n, m] : f.coanalytic()) {
    g.set_b(n, std::polar(m, rng.uniform(0.0, 2.0 * std::numbers::pi)));
  }
  return g;
}

/// min over the grid of Re E minus beta; positive means no counterexample.
inline double sufficiency_margin(const HarmonicFunction& f, const ClassParams& p,
                                 const DiskGrid& grid) {
  return min_real_E(f, p, grid).value - p.beta();
}

/// Draws `cases` members (even cases keep the negative-coefficient signs,
/// odd cases get random phases) and checks min Re E > beta on the grid.
inline VerificationReport verify_sufficiency(const ClassParams& p, int cases, std::uint64_t seed,
                                             const DiskGrid& grid) {
  if (cases < 1) throw DomainError("verify_sufficiency: cases must be >= 1");
  VerificationReport report;
  report.suite = "sufficiency";
  report.grid_tag = grid.tag();
  report.params = p;
  report.seed = seed;
  std::optional<Witness> worst_failure;
  for (int i = 0; i < cases; ++i) {
    const auto case_seed = mix_seed(seed, static_cast<std::uint64_t>(i));
    const NegativeCoefficientForm member = random_member(p, case_seed);
    const HarmonicFunction f =
        i % 2 == 0 ? member.to_harmonic() : randomize_phases(member, mix_seed(case_seed, 1));
    const GridMinimum m = min_real_E(f, p, grid);
    const double margin = m.value - p.beta();
    ++report.cases_run;
    if (margin > 0.0) {
      ++report.cases_passed;
    } else if (!worst_failure || m.value < worst_failure->value) {
      worst_failure = Witness{static_cast<std::size_t>(i), m.where.z(), m.value};
    }
    report.worst_margin = std::min(report.worst_margin, margin);
  }
  report.witness = worst_failure;
  return report;
}

/// Draws `cases` violators and looks for a radial witness for each. The
/// margin of a case is -Q(r0) (or -Q(1 - 1e-8) when no witness exists).
inline VerificationReport verify_necessity(const ClassParams& p, int cases, std::uint64_t seed) {
  if (cases < 1) throw DomainError("verify_necessity: cases must be >= 1");
  VerificationReport report;
  report.suite = "necessity";
  report.grid_tag = "radial-1e-1..1e-8";
  report.params = p;
  report.seed = seed;
  std::optional<Witness> worst_failure;
  for (int i = 0; i < cases; ++i) {
    const auto case_seed = mix_seed(seed, static_cast<std::uint64_t>(i));
    const NegativeCoefficientForm f = random_violator(p, case_seed);
    const auto r0 = find_necessity_witness(f, p);
    const double r = r0.value_or(witness_radii().back());
    const double q = radial_bound(f, p, r);
    ++report.cases_run;
    if (r0) {
      ++report.cases_passed;
    } else if (!worst_failure || q > worst_failure->value) {
      worst_failure = Witness{static_cast<std::size_t>(i), Complex{r, 0.0}, q};
    }
    report.worst_margin = std::min(report.worst_margin, -q);
  }
  report.witness = worst_failure;
  return report;
}

}  // namespace hmclass
