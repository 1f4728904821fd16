#pragma once

#include <stdexcept>
#include <string>

namespace hmclass {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantity that must be divided by is numerically zero.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// |psi(n)| vanishes at an index that carries a co-analytic coefficient.
class DegenerateWeightError : public SingularityError {
 public:
  using SingularityError::SingularityError;
};

/// Weights or coefficient budgets do not sum to the required total.
class WeightSumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is not in the (closed) class the operation requires.
class MembershipError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters do not pin the value a specialization requires.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed coefficient or decomposition document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hmclass
