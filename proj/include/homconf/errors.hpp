#pragma once

#include <stdexcept>
#include <string>

namespace homconf {

/// Malformed or out-of-contract user input (bad quiver spec, bad partition,
/// violated preconditions of a public operation).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cache file failed its integrity or compatibility checks.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold for Dynkin quivers was violated.
/// Always signals a defect in this library, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace homconf
