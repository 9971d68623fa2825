#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Precondition violated by the caller (mismatched degrees, bad ranges, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured resource ceiling (degree, table size, search space) was exceeded.
class SizeLimitError : public std::length_error {
 public:
  SizeLimitError(const std::string& what, long requested, long ceiling)
      : std::length_error(what + ": requested " + std::to_string(requested) +
                          " exceeds ceiling " + std::to_string(ceiling)),
        requested_(requested),
        ceiling_(ceiling) {}

  long requested() const noexcept { return requested_; }
  long ceiling() const noexcept { return ceiling_; }

 private:
  long requested_;
  long ceiling_;
};

/// A deformation parameter hit a degenerate value (vanishing Gram pivot, ...).
class SingularParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hurwitz
