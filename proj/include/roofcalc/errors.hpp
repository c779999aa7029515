#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roofcalc {

// Bad input: unsupported type/rank, node out of range, non-dominant weight...
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured element cap.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(const std::string& what, std::size_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

// A weight multiset that cannot be the character of a Levi representation.
class NotARepresentation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant (e.g. an exact division that left a remainder).
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace roofcalc
