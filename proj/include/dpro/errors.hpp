#pragma once

#include <stdexcept>
#include <string>

namespace dpro {

// Failure classes map onto CLI exit codes: configuration/parameter problems
// exit with 2, data problems with 3, solver failures with 4.

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ParameterError : ConfigError {
  explicit ParameterError(const std::string& what) : ConfigError(what) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a structural invariant (simplex membership, grid shape, ...).
struct InvariantError : DataError {
  explicit InvariantError(const std::string& what) : DataError(what) {}
};

// Point outside the utility domain.
struct DomainError : DataError {
  explicit DomainError(const std::string& what) : DataError(what) {}
};

// Sample covariance too close to singular for the moment machinery.
struct DegeneracyError : DataError {
  explicit DegeneracyError(const std::string& what) : DataError(what) {}
};

struct ModelError : DataError {
  explicit ModelError(const std::string& what) : DataError(what) {}
};

struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dpro
