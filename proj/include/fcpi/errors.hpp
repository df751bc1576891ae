#pragma once

#include <stdexcept>
#include <string>

namespace fcpi {

/// Input exceeds a configured resource limit (e.g. dimension too large).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A cell incidence precondition was violated (face not in a closure).
struct IncidenceError : std::runtime_error {
  explicit IncidenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural property the construction relies on failed to hold.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exact computation was aborted because its work budget ran out.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed serialized input.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fcpi
