#pragma once

#include <stdexcept>

namespace botplan {

/// Base class for every failure the planner reports to callers.
struct PlannerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Broken invariants, malformed structures, bad references.
struct ValidationError : PlannerError {
  using PlannerError::PlannerError;
};

/// Catalog text could not be parsed; the message carries the line number.
struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

/// No allocation in the catalog can satisfy the constraint.
struct InfeasibleError : PlannerError {
  using PlannerError::PlannerError;
};

}  // namespace botplan
