#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two quadratic scalars with different non-trivial radicands were combined.
class IncompatibleRingError : public Error {
 public:
  using Error::Error;
};

/// A denominator shares a factor with the modulus, so reduction is undefined.
class UndecidableLocalizationError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class ModulusMismatchError : public Error {
 public:
  using Error::Error;
};

/// beta*a - alpha*b vanished where an expansion needs it to be nonzero.
class DegeneratePointError : public Error {
 public:
  using Error::Error;
};

/// The point lies in the kernel: Psi(point, n) = 0.
class KernelPointError : public Error {
 public:
  using Error::Error;
};

/// An identity that is supposed to hold exactly did not.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The exact computation was refused because it exceeds the configured bound.
class ResourceBoundError : public Error {
 public:
  using Error::Error;
};

class UnknownCheckError : public Error {
 public:
  using Error::Error;
};

/// Internal tables disagree with a fact they must satisfy (e.g. prime gaps).
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qps
