#pragma once

#include <stdexcept>

namespace steadykit {

/// Base class for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inputs with the wrong shape for the requested operation.
struct ShapeError : Error {
  using Error::Error;
};

/// A state or parameter violating its documented invariants.
struct ValidationError : Error {
  using Error::Error;
};

/// Kossakowski data whose spectrum is negative beyond tolerance.
struct NotCompletelyPositiveError : Error {
  using Error::Error;
};

/// Traceless sigma with mu^2 = sum_j u_j^2 = 0: no involutory similarity
/// onto sigma_3 exists; callers fall back to the direct commutant.
struct SingularSigmaError : Error {
  using Error::Error;
};

/// Minimal-projector extraction could not separate eigenvalue groups.
struct GroupingAmbiguousError : Error {
  using Error::Error;
};

/// Asymptotic state requested for dynamics with surviving oscillations.
struct NoLimitError : Error {
  using Error::Error;
};

/// Malformed configuration or report documents.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace steadykit
