#pragma once

#include <stdexcept>
#include <string>

namespace symexp {

/// Input outside the mathematical domain of an operation (negative eta, zero mass, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configuration or plan failed validation.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The multi-photon pulse limit N * P_int << 1 does not hold.
class PulseAssumptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical integration could not reach the requested accuracy.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symexp
