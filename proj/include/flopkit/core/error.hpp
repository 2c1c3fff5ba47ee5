#pragma once

#include <stdexcept>
#include <string>

namespace flopkit {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input data is geometrically degenerate (dependent vectors, rank drop, ...).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// An iterative numeric method hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace flopkit
