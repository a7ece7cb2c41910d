#pragma once

#include <stdexcept>
#include <string>

namespace eur {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad index set, mismatched
/// dimensions, malformed matrix).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the physical domain (e.g. R0 < 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPositiveSemidefiniteError : public Error {
 public:
  explicit NotPositiveSemidefiniteError(double eigenvalue)
      : Error("not positive semidefinite: eigenvalue " + std::to_string(eigenvalue)),
        eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// The transformed mode has support on the pair state |p>, whose
/// Bogoliubov expansion is not available.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed beyond tolerance. Indicates a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace eur
