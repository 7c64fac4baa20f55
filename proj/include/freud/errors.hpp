#pragma once

#include <stdexcept>
#include <string>

namespace freud {

// Bad arguments / preconditions (out-of-range indices, malformed specs).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation requested on a branch cut or other excluded set.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Numeric breakdown that is not a caller error (eigensolver failure,
// arithmetic underflow where a positive quantity was expected, ...).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iteration failed to reach the requested tolerance; carries the last residual.
struct ConvergenceError : NumericError {
  double last_residual;
  ConvergenceError(const std::string& msg, double residual)
      : NumericError(msg + " (last residual " + std::to_string(residual) + ")"),
        last_residual(residual) {}
};

// A quadrature rule or discretization is too coarse for the request.
struct ResolutionError : NumericError {
  using NumericError::NumericError;
};

// Integrand returned a non-finite value; names the offending node.
struct EvaluationError : NumericError {
  using NumericError::NumericError;
};

// Scaled-value arithmetic left the representable exponent range.
struct ScaleError : NumericError {
  using NumericError::NumericError;
};

}  // namespace freud
