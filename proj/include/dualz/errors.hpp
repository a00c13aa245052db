#pragma once

#include <stdexcept>
#include <string>

namespace dualz {

/// Base class for every error raised by the library on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix, vector or object dimensions do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The generators of a subgroup embedding are linearly dependent.
class NotInjectiveError : public Error {
 public:
  using Error::Error;
};

/// A value violates the defining identity of its type (e*e != 0, d*d != 0,
/// a morphism that does not intertwine, ...).
class InvalidStructureError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or an unexpected field layout.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An edge of the cube that cannot leave the given vertex.
class InvalidEdgeError : public Error {
 public:
  using Error::Error;
};

}  // namespace dualz
