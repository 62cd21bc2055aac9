#pragma once

#include <stdexcept>
#include <string>

namespace nbsc {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameter values (r <= 0, p outside (0,1), negative counts, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Sample variance <= sample mean: method-of-moments NB estimates undefined.
class EquidispersionError : public Error {
 public:
  using Error::Error;
};

/// Iterative fit did not meet its tolerance within the iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Series too short for the requested window/operation.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// Degenerate input (constant series, zero denominator).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Rank-deficient design matrix.
class SingularDesignError : public Error {
 public:
  using Error::Error;
};

/// Scenario violates the procurement budget.
class InfeasibleScenarioError : public Error {
 public:
  using Error::Error;
};

/// Every grid point violates the budget.
class NoFeasiblePointError : public Error {
 public:
  using Error::Error;
};

/// Required columns missing from a CSV header / column mapping.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace nbsc
