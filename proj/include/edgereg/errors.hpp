#pragma once

#include <stdexcept>
#include <string>

namespace edgereg {

/// Raised when a computation would exceed one of the configured engine caps
/// (lattice size, order-complex faces, Taylor generators, ...).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: graph6, monomial syntax, builder specs.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edgereg
