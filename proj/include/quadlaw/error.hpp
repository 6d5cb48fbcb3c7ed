#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadlaw {

/// Failure classes raised by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
  SpecMismatch,      // operands live over different fields or algebras
  Characteristic,    // characteristic 2 or 3, or a non-prime modulus
  DegenerateInput,   // division by zero, zero element where a unit is required
  Unsupported,       // operation needs a finite field
  ZeroDivisor,       // inversion of a norm-zero algebra element
  NotHyperbolic,     // split requested on an elliptic algebra
  SingularMap,       // act() with det(u) = 0
  NotRegular,        // invariants requested on a non-regular law
  Indeterminate,     // vanishing denominator when recovering K, N(a)
  Degenerate,        // attached quadratic form is degenerate
  Unknown,           // bounded search over Q was inconclusive
  InternalError,     // a proved identity failed; indicates a bug
  TooLarge,          // oracle ceiling exceeded
  Malformed,         // unparsable serialized input
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace quadlaw
