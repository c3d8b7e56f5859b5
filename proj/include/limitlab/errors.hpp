#pragma once

#include <stdexcept>
#include <string>

namespace limitlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked about a value outside the domain it is defined on
/// (alphabet mismatch, metric pair outside its domain, empty language text).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument violates an operation's stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed experiment configuration; `field()` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error("config field '" + field + "': " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace limitlab
