#pragma once

#include <stdexcept>
#include <string>

namespace thetakit {

/// Input lies outside the hypotheses of the formula being evaluated.
/// The CLI maps this to exit code 1.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold exactly did not. Always a bug in the
/// formula implementation, never a data condition. CLI exit code 2.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A cyclotomic value expected to be rational had nonzero coefficients on
/// positive powers of zeta.
class NonRationalError : public ConsistencyError {
 public:
  NonRationalError(const std::string& what, std::string max_residual)
      : ConsistencyError(what), max_residual_(std::move(max_residual)) {}

  const std::string& max_residual() const noexcept { return max_residual_; }

 private:
  std::string max_residual_;
};

/// The requested evaluation would exceed the configured work budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thetakit
