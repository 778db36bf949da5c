#pragma once

#include <stdexcept>
#include <string>

namespace catenoid {

//! Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! Argument outside the domain of a chart or operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

//! Section scale a = 0: the catenoid collapses to a line.
class DegenerateSectionError : public DomainError {
 public:
  using DomainError::DomainError;
};

//! Evaluation on the throat circle in a chart whose metric has a pole there.
class ThroatSingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

//! Intermediate would overflow double range (cosh of large arguments).
class RangeError : public Error {
 public:
  using Error::Error;
};

//! Integration or eigen-search failed to produce a trustworthy number.
class NumericalError : public Error {
 public:
  using Error::Error;
};

//! Solver configuration cannot resolve the requested problem.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

}  // namespace catenoid
