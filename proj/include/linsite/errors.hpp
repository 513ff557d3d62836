#pragma once

#include <stdexcept>
#include <string>

namespace linsite {

/// Malformed or incompatible input: field mismatches, typing errors,
/// unknown identifiers, broken invariants detected at construction.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration bound would be exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linsite
