#ifndef GENDERFLOW_ERROR_HPP
#define GENDERFLOW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace genderflow {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data: bad file rows, count mismatches,
/// violated invariants. Maps to CLI exit code 2.
class DataError : public Error {
public:
  using Error::Error;
};

/// Invalid configuration: missing required resources, bad plan values.
/// Maps to CLI exit code 2.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// External translation service failure: unreachable endpoint, bad response,
/// subprocess failure. Maps to CLI exit code 3.
class ServiceError : public Error {
public:
  using Error::Error;
};

} // namespace genderflow

#endif
