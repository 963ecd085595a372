#pragma once

#include <stdexcept>
#include <string>

namespace madbench {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration, invalid CLI input, HTTP 4xx. Maps to exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Dataset line failed validation; message carries the line number.
class SchemaError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Protocol or category combination the method does not support
// (e.g. self-consistency on programming tasks).
class UnsupportedCategoryError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Network-level failure after all retries were exhausted.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int attempts)
      : Error(what), attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// The endpoint answered but the reply is unusable (empty completion,
// malformed body).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Mock script lookup miss under the `error` fallback policy.
class ScriptMissError : public Error {
 public:
  using Error::Error;
};

}  // namespace madbench
