#pragma once

#include <stdexcept>
#include <string>

namespace rhoplane {

/// Root of the library's exception hierarchy. `kind()` is a stable short tag
/// used in structured error output.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept = 0;
};

/// Invalid norm parameters or malformed spec strings.
class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

/// Arguments outside an operation's domain (zero vectors, ρ ∉ (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Operation requires a smooth strictly convex norm.
class UnsupportedSpecError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unsupported-spec"; }
};

/// A solver failed to bracket or converge.
class NumericalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "numerical"; }
};

/// Degenerate or inconsistent geometric configuration.
class GeometryError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "geometry"; }
};

}  // namespace rhoplane
