#pragma once

#include <stdexcept>
#include <string>

namespace boltz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ImaginaryResidueExceeded : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class NonpositiveDensity : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class NonFiniteOutput : public Error {
 public:
  using Error::Error;
};

class DivisionUnderflow : public Error {
 public:
  using Error::Error;
};

class DegenerateFlux : public Error {
 public:
  using Error::Error;
};

class NonFiniteState : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace boltz
