#pragma once

#include <stdexcept>
#include <string>

namespace heatcoeff {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// Invalid solver / run configuration (grids, steps, file contents).
class ConfigError : public Error {
public:
  using Error::Error;
};

// An iterative method did not converge within its budget.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

// A certified approximation could not reach its error target.
class ApproximationError : public Error {
public:
  using Error::Error;
};

} // namespace heatcoeff
