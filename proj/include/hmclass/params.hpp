#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "hmclass/errors.hpp"

namespace hmclass {

/// Absolute tolerance on the deficiency used by every verdict.
inline constexpr double kVerdictTolerance = 1e-12;

/// |psi| at or below this is treated as zero.
inline constexpr double kDegenerateWeight = 1e-14;

/// Parameters (beta, lambda, k, nu) of the class HM(beta, lambda, k, nu).
///
/// Invariants, checked on construction: 0 <= beta < 1, lambda >= 0,
/// 0 <= k <= 1, 0 <= nu < 1.
class ClassParams {
 public:
  ClassParams() = default;
  ClassParams(double beta, double lambda, double k, double nu)
      : beta_(beta), lambda_(lambda), k_(k), nu_(nu) {
    validate();
  }

  double beta() const { return beta_; }
  double lambda() const { return lambda_; }
  double k() const { return k_; }
  double nu() const { return nu_; }

  /// 1 - beta, the coefficient budget of the class.
  double budget() const { return 1.0 - beta_; }

  /// Same (lambda, k, nu) at a different level beta.
  ClassParams at_level(double beta) const { return {beta, lambda_, k_, nu_}; }

  std::string to_string() const {
    std::ostringstream os;
    os << "(beta=" << beta_ << ", lambda=" << lambda_ << ", k=" << k_ << ", nu=" << nu_ << ")";
    return os.str();
  }

  friend bool operator==(const ClassParams&, const ClassParams&) = default;

 private:
  void validate() const {
    if (!std::isfinite(beta_) || !std::isfinite(lambda_) || !std::isfinite(k_) ||
        !std::isfinite(nu_)) {
      throw DomainError("class parameters must be finite");
    }
    if (!(beta_ >= 0.0 && beta_ < 1.0)) {
      throw DomainError("beta must lie in [0,1), got " + std::to_string(beta_));
    }
    if (!(lambda_ >= 0.0)) {
      throw DomainError("lambda must be >= 0, got " + std::to_string(lambda_));
    }
    if (!(k_ >= 0.0 && k_ <= 1.0)) {
      throw DomainError("k must lie in [0,1], got " + std::to_string(k_));
    }
    if (!(nu_ >= 0.0 && nu_ < 1.0)) {
      throw DomainError("nu must lie in [0,1), got " + std::to_string(nu_));
    }
  }

  double beta_ = 0.0;
  double lambda_ = 0.0;
  double k_ = 0.0;
  double nu_ = 0.0;
};

}  // namespace hmclass
