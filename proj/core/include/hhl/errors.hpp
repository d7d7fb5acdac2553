#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhl {

// Generator index outside the ambient rank, or a vector entry larger than n.
class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input: bad q, bad field, zero parameter, unparsable token.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mixing Hecke elements or scalars that live over different contexts.
class ContextError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A chain complex whose boundary does not square to zero.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed the configured size guard.
/// `estimate` is the size of the largest chain group that would be built.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, std::uint64_t estimate, std::uint64_t limit)
      : std::runtime_error(what), estimate_(estimate), limit_(limit) {}

  std::uint64_t estimate() const { return estimate_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t limit_;
};

}  // namespace hhl
