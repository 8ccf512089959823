#pragma once

#include <stdexcept>
#include <string>

namespace randpoly {

// Caller passed arguments outside an operation's contract.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input is valid but exceeds an enumeration or precision ceiling.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace randpoly
