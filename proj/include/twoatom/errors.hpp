#pragma once

#include <stdexcept>
#include <string>

namespace twoatom {

// Invalid input: broken type invariant, malformed config, bad CLI value.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a special function (e.g. Ei at 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A physical configuration where an amplitude is genuinely singular,
// e.g. b exactly on the light cone or z == z_max in the self-energy.
class SingularConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Both components of a two-component state vanish.
class UndefinedState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature did not reach its tolerance.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double error_estimate)
      : std::runtime_error(what), error_estimate_(error_estimate) {}
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

}  // namespace twoatom
