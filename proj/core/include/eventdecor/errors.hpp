#pragma once

#include <stdexcept>
#include <string>

namespace eventdecor {

/// A physical or mathematical precondition on an input value is violated
/// (non-positive mass, radius inside the horizon, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical routine failed to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double estimate, double error_estimate)
      : std::runtime_error(what + " (estimate " + std::to_string(estimate) +
                           ", error estimate " + std::to_string(error_estimate) + ")"),
        estimate_(estimate),
        error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// Discrete objects built on different grids were combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A modelling assumption (weak pump, few-photon truncation) does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eventdecor
