#pragma once

#include <stdexcept>
#include <string>

namespace matbeta {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input: unparsable file, bad flag combination, non-symmetric
// matrix in a symmetric slot, unsupported beta outside extended mode.
struct InvalidInput : Error {
  using Error::Error;
};

// Dimension mismatch between operands.
struct ShapeError : Error {
  using Error::Error;
};

struct NotPSD : Error {
  using Error::Error;
};

struct NotPD : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

// Parameter leaves the domain of a special function.  Carries the index of
// the offending factor when there is one (1-based, 0 when not applicable).
struct DomainError : Error {
  int index = 0;
  DomainError(const std::string& msg, int idx = 0) : Error(msg), index(idx) {}
};

// Argument outside the support of a distribution function.
struct OutsideSupport : Error {
  using Error::Error;
};

// A lower series parameter makes some denominator Pochhammer vanish.
struct BadLowerParameter : Error {
  using Error::Error;
};

// A series needs more degrees than the configured hard cap allows.
struct TruncationCapExceeded : Error {
  using Error::Error;
};

// Requested contrast is not estimable under the given design matrix.
struct NotEstimable : Error {
  using Error::Error;
};

// Degrees of freedom left after parameter swapping are not positive.
struct DegenerateDesign : Error {
  using Error::Error;
};

// Every candidate series expression diverged; no consensus value exists.
struct AllDiverged : Error {
  using Error::Error;
};

}  // namespace matbeta
