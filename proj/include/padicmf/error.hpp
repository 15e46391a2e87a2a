#pragma once

#include <stdexcept>
#include <string>

namespace padicmf {

/// Input outside the domain of an operation (e.g. log of a non-principal unit).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an operation would need more p-adic precision than is available,
/// typically an inexact division by p.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A form was handed to an operator that expects a different splitting.
class CoordinateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Documented but deliberately unimplemented input class.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace padicmf
