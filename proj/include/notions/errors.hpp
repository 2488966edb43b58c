#pragma once

#include <stdexcept>
#include <string>

namespace notions {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched domain/codomain, index out of range, malformed factorization.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A wedge handed to `factorize` does not respect a coend relation.
class DinaturalityError : public Error {
 public:
  using Error::Error;
};

/// A component that must be a bijection is not.
class InvertibilityError : public Error {
 public:
  using Error::Error;
};

/// An element lies outside the truncation bound of a coend and cannot be
/// rewritten into it.
class CoendBoundError : public Error {
 public:
  using Error::Error;
};

/// Unknown suite or instance name.
class LookupError : public Error {
 public:
  using Error::Error;
};

}  // namespace notions
