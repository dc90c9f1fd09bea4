#pragma once

#include <stdexcept>
#include <string>

namespace pqbasis {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature ran out of evaluations before meeting its tolerance.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double best_value, double best_error)
      : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}

  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

/// The integrand returned NaN or infinity at an interior node.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  NonFiniteIntegrand(const std::string& what, double where)
      : std::runtime_error(what), where_(where) {}
  double where() const noexcept { return where_; }

 private:
  double where_;
};

/// A criterion's hypothesis cannot be decided at the available accuracy:
/// the numeric interval straddles the threshold.
class IndeterminateVerdict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root finder was handed a bracket without a sign change.
class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation that relies on nonnegative Fourier coefficients found a
/// negative one.
class NonnegativityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pqbasis
