#pragma once

#include <stdexcept>
#include <string>

namespace bfh {

// Library code throws; the CLI maps exception types to exit codes.
// ParseError -> 2, GuardrailError -> 3, InvariantError -> 4.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuardrailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant failed.  These indicate a bug in the construction
// (the bounds they guard are theorems), never bad user input.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace bfh
