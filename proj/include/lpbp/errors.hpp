#pragma once

#include <stdexcept>
#include <string>

namespace lpbp {

/// Raised when an argument violates an operation's precondition or a
/// closed form is evaluated outside the hypothesis that makes it valid.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an exhaustive enumeration would exceed the configured cap.
class EnumerationCapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace lpbp
