#pragma once

#include <stdexcept>
#include <string>

namespace wm {

// Malformed or out-of-range input. Maps to CLI exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : InputError {
  using InputError::InputError;
};

// Input is well formed but outside the domain of the operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedGroupError : InputError {
  using InputError::InputError;
};

// A configured size guard was exceeded. Maps to exit code 3.
struct ResourceError : std::runtime_error {
  ResourceError(const std::string& what, long limit)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ")"), bound(limit) {}
  long bound;
};

// An internal consistency check failed. Maps to exit code 4.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

#define WM_CHECK(cond, msg)                      \
  do {                                           \
    if (!(cond)) throw ::wm::InvariantError(msg); \
  } while (0)

}  // namespace wm
