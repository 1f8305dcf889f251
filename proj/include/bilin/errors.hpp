#pragma once

#include <stdexcept>
#include <string>

namespace bilin {

/// Malformed caller input: bad indices, dimension mismatch, bad file contents.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size cap (bitmask width, enumeration limit, LP column limit) was exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal invariant failed. Always indicates a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bilin
