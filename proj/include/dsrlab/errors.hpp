#pragma once

#include <stdexcept>
#include <string>

namespace dsrlab {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoSignChange : NonConvergence {
  using NonConvergence::NonConvergence;
};

// Carries the Benford scale bound [M log M - log M!]^{-1} that was exceeded.
struct ValidityViolation : std::runtime_error {
  ValidityViolation(const std::string& msg, double bound_value)
      : std::runtime_error(msg), bound(bound_value) {}
  double bound;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dsrlab
