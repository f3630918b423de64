#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace overpart {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in different residue rings.
struct RingMismatch : Error {
  using Error::Error;
};

/// A coefficient beyond the known truncation was requested, or a result
/// would exceed the global truncation cap.
struct TruncationError : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

/// Input is outside the desk-scale budget an operation is willing to run.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

/// Raised by decompose when the residual does not vanish.
struct NotInSpan : Error {
  NotInSpan(std::size_t exponent, const std::string& what)
      : Error(what), first_exponent(exponent) {}
  std::size_t first_exponent;
};

}  // namespace overpart
