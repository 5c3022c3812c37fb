#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace guinand {

/// Raised when a table, oracle box or lattice enumeration would exceed its
/// configured budget. Never raised after partial work has been returned.
class WorkCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in a test-function expression. `offset()` is the
/// byte offset into the source text where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error("at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An exact-mode operation needs a value outside the exact field
/// (e.g. the square root of a non-square rational scale).
class NotExact : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace guinand
