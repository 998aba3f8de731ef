#pragma once

#include <stdexcept>
#include <string>

namespace oscforce {

/// Argument outside the mathematical domain of a function (e.g. re(z) <= 0 for digamma).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A physical or contractual precondition of an operation does not hold.
class PreconditionViolation : public std::invalid_argument {
 public:
  explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested Matsubara sum diverges (Ohmic damping with a lambda-dependent gamma).
class DivergentSum : public std::runtime_error {
 public:
  explicit DivergentSum(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oscforce
