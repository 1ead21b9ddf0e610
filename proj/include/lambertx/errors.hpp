#pragma once

#include <stdexcept>
#include <string>

namespace lambertx {

// Argument outside the mathematical domain of the requested operation.
// These are caller errors.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iteration ran out of budget without meeting its accuracy bound.
// Seeing one of these at default settings indicates a defect.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Operation invoked on a value in the wrong regime (e.g. a tangency
// certificate requested for a base that is not tangent).
class StateError : public std::logic_error {
 public:
  explicit StateError(const std::string& what) : std::logic_error(what) {}
};

class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace lambertx
