#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mqtlab {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Operands with incompatible shapes.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration or summation exceeded its configured guard.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed constants profile or command-line configuration. Carries the
/// offending key when there is one.
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}

  [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

}  // namespace mqtlab
