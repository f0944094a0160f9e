#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tango {

/// Index of a data point. 32 bits is enough for the dataset sizes this
/// library targets and keeps the hot adjacency arrays compact.
using PointId = std::int32_t;

constexpr PointId kNoPoint = -1;

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid parameters or configuration (bad k, bad cluster count, ...).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Malformed or degenerate input data (parse failures, non-finite values,
/// zero-diameter neighborhoods, ...).
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

/// Fewer modes were found than the requested number of clusters.
class InsufficientModesError : public Error {
 public:
  explicit InsufficientModesError(const std::string& msg) : Error(msg) {}
};

/// Violation of an internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace tango
