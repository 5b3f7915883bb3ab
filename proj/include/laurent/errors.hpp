#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace laurent {

// Base for every error raised by the library. Callers that do not care about
// the specific failure can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// An argument violates an operation's precondition (zero where f is
// undefined, malformed input, bound violations, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The Laurent parameters fall into a regime the operation does not handle.
class RegimeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// a = b = c = 0: every value is a root.
class DegenerateIdentity : public Error {
 public:
  DegenerateIdentity() : Error("degenerate identity: all coefficients vanish") {}
};

class SingularCurve : public Error {
 public:
  using Error::Error;
};

class NotOnCurve : public Error {
 public:
  using Error::Error;
};

class NoBasePoint : public Error {
 public:
  using Error::Error;
};

// A birational map was evaluated where one of its denominators vanishes.
class ExceptionalPoint : public Error {
 public:
  explicit ExceptionalPoint(std::string denominator)
      : Error("exceptional point: denominator " + denominator + " vanishes"),
        denominator_(std::move(denominator)) {}

  const std::string& denominator() const noexcept { return denominator_; }

 private:
  std::string denominator_;
};

// A closed form produced a triple that does not satisfy its equation. This
// indicates a bug, never bad user input.
class InternalVerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace laurent
