#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kleinforge {

/// A precondition on an argument was violated (n out of range, bad radii, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A fixed representation limit was exceeded (e.g. n > 63 for bitmask monomials).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An exhaustive search would exceed its configured size bound.
class FeasibilityError : public std::runtime_error {
 public:
  FeasibilityError(const std::string& what, std::uint64_t required, std::uint64_t bound)
      : std::runtime_error(what), required_(required), bound_(bound) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t required_;
  std::uint64_t bound_;
};

/// An internal mathematical invariant failed; indicates a bug or a false claim.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kleinforge
