#pragma once

#include <stdexcept>
#include <string>

namespace shallow {

/// Malformed external input (graph6 text, witness documents, CLI values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search refused to run because the graph is above a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (empty set, vertex out of range, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructive procedure produced an object that fails the property it is
/// guaranteed to have. This always indicates a bug, never bad input.
class ProofViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace shallow
