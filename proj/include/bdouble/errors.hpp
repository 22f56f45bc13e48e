#pragma once

#include <stdexcept>
#include <string>

namespace bdouble {

// Caller supplied something outside an operation's contract (bad type
// string, zero epsilon where it must be invertible, mismatched sizes).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structural check that should hold by construction did not. These are
// never swallowed; a failing Jacobi check on a freshly built algebra means
// the builder is wrong.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A mathematical statement under test failed on a concrete instance.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested computation exceeds a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bdouble
