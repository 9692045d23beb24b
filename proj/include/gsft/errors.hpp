#pragma once

#include <stdexcept>
#include <string>

namespace gsft {

/// Malformed or inconsistent input: failed validation, schema violations,
/// shape or coefficient-domain mismatches, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A condition the library guarantees internally did not hold. Indicates a
/// bug in this library, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace gsft
