#ifndef POLYDEC_ERRORS_HPP
#define POLYDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polydec {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixing values from different coefficient fields.
struct CtxMismatch : Error {
  using Error::Error;
};

/// Variable counts or component counts do not line up.
struct ArityMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

/// Homogenization target degree below the actual degree of the input.
struct DegreeTooSmall : Error {
  using Error::Error;
};

struct DimMismatch : Error {
  using Error::Error;
};

/// Quotient by the zero linear form (or a non-linear "linear" form).
struct DegenerateLinearForm : Error {
  using Error::Error;
};

struct InvalidRank : Error {
  using Error::Error;
};

struct EmptySpace : Error {
  using Error::Error;
};

struct DimExceedsN : Error {
  using Error::Error;
};

/// A probabilistic trial was requested outside its guarantee hypotheses.
struct HypothesisViolated : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

/// Malformed serialized input; the message carries position information.
struct ParseError : Error {
  using Error::Error;
};

/// Generic precondition violation (e.g. no degree-4 component).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace polydec

#endif
