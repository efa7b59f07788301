#pragma once

#include <stdexcept>
#include <string>

namespace peakalg {

/// A rank exceeds the configured enumeration or computation cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An element lies outside the group or algebra an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A product or image that should lie in a span does not. Carries the witness.
class NotInSpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace peakalg
