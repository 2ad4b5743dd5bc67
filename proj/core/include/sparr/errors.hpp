#pragma once

#include <stdexcept>
#include <string>

namespace sparr {

/// Bad run configuration (files, CLI, infeasible parameter combinations).
/// Mapped to exit code 2 by the command line tool.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical breakdown (non-finite values, singular inputs). Exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// root-MUSIC could not produce the requested number of angles.
class EstimationFailure : public NumericError {
 public:
  EstimationFailure(const std::string& what, int requested, int admissible)
      : NumericError(what), requested_(requested), admissible_(admissible) {}
  int requested() const { return requested_; }
  int admissible() const { return admissible_; }

 private:
  int requested_;
  int admissible_;
};

/// Filesystem failure. Exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sparr
