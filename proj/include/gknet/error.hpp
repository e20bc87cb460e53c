#pragma once

#include <stdexcept>
#include <string>

namespace gknet {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Arguments violate a documented precondition (bad value, wrong count).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Tensor or matrix dimensions do not match the expected layout.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A 3D point has non-positive depth in the camera frame.
class BehindCameraError : public Error {
 public:
  using Error::Error;
};

/// Geometric configuration is too ill-conditioned to solve (coplanar points,
/// insufficient correspondences, rank-deficient system).
class DegenerateConfigError : public Error {
 public:
  using Error::Error;
};

/// Robust estimation could not find a consensus set of the minimal size.
class NoConsensusError : public Error {
 public:
  using Error::Error;
};

/// A numeric computation produced non-finite values.
class NumericalFailureError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration file or incompatible config/checkpoint combination.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure; carries the offending path in the message.
class IoError : public Error {
 public:
  IoError(const std::string& msg, const std::string& path)
      : Error(msg + ": " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace gknet
