#pragma once

#include <stdexcept>
#include <string>

namespace chm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, poset-axiom violations, unknown fixture names.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a value outside its domain (e.g. a lattice
/// operation on a poset that is not a complete lattice).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size guard was exceeded. The CLI maps this to exit code 2.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace chm
