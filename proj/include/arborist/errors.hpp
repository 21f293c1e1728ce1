#pragma once

#include <stdexcept>

namespace arborist {

/// Input rejected by a precondition check.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base point for which the family's orbit structure degenerates.
class DegenerateBasePoint : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal consistency check failed: a bug or a breached hypothesis.
/// Never caught and absorbed inside the library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arborist
