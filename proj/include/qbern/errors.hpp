#pragma once

#include <stdexcept>
#include <string>

namespace qbern {

/// Raised when an exact-arithmetic routine needs a power of q (or α) that is
/// not rational in the current context.
class ExactModeError : public std::domain_error {
 public:
  explicit ExactModeError(const std::string& what) : std::domain_error(what) {}
};

/// Argument outside the domain of a function (e.g. e_q outside its disk).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Numerical procedure could not deliver a certified result.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbern
