#pragma once

#include <stdexcept>
#include <string>

namespace faberkit {

// Raised when an argument violates a mathematical precondition
// (division by zero, gamma = 0, unnormalized series, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised by the scalar and series text parsers.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace faberkit
