#pragma once

#include <stdexcept>
#include <string>

namespace oodd {

// Bad argument: out-of-range value, malformed number, mixed radicands, pole of a map.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An iteration guard tripped (jump transform, period detection).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A digit sequence that does not describe any point of [0,1].
class MalformedExpansion : public std::runtime_error {
 public:
  explicit MalformedExpansion(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oodd
