#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

/// Input outside an operation's mathematical domain (non-positive log
/// argument, singular matrix, zero vector, degenerate polytope, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or schema-invalid input data.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or dimension budget was exceeded. `bounds` carries a
/// human-readable description of the best bounds known at the point of
/// failure.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::string bounds = {})
      : std::runtime_error(what), bounds_(std::move(bounds)) {}
  const std::string& bounds() const noexcept { return bounds_; }

 private:
  std::string bounds_;
};

/// Certified interval refinement hit the configured bit cap.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested feature is outside what the implementation supports.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A checked mathematical invariant failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace adelic
