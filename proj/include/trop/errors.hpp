#pragma once

#include <stdexcept>
#include <string>

namespace trop {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a documented precondition (zero polynomial, non-face pair, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Operation is outside the supported scope (rank bound, non-monomial inverse,
/// irrational leading residue, ...).
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

/// Text input failed to parse; message carries position information.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A point or map does not fit the chart it was paired with.
struct ChartMismatchError : Error {
  explicit ChartMismatchError(const std::string& what) : Error(what) {}
};

/// Value table is not a monoid homomorphism / point data is inconsistent.
struct MalformedPointError : Error {
  explicit MalformedPointError(const std::string& what) : Error(what) {}
};

/// Expression cannot be evaluated over the given presentation.
struct PresentationError : Error {
  explicit PresentationError(const std::string& what) : Error(what) {}
};

/// A certified search exhausted its budget without a witness.
struct NotFoundError : Error {
  explicit NotFoundError(const std::string& what) : Error(what) {}
};

}  // namespace trop
