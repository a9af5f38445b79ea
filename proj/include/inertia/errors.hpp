#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

/// Base class for all library errors. The CLI maps these to exit code 3
/// (data/validation errors); usage errors are handled by the parser itself.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative eigensolver exceeded its sweep budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// An exact-mode operation received a floating-point entry.
class NotExact : public Error {
 public:
  using Error::Error;
};

/// Congruence transform with a non-invertible matrix.
class Singular : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class BadSubset : public Error {
 public:
  using Error::Error;
};

/// Operation requires a positive semidefinite input.
class NotAState : public Error {
 public:
  using Error::Error;
};

/// Operation requires a state with non-positive partial transpose.
class NotNpt : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters.
class BadSpec : public Error {
 public:
  using Error::Error;
};

class NotPsd : public Error {
 public:
  using Error::Error;
};

/// A required parameter inequality does not hold; the message names it.
class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

class TooManyProducts : public Error {
 public:
  using Error::Error;
};

class NoKernel : public Error {
 public:
  using Error::Error;
};

class NoKernelProduct : public Error {
 public:
  using Error::Error;
};

class Unsorted : public Error {
 public:
  using Error::Error;
};

}  // namespace inertia
