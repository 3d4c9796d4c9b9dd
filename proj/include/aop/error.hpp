#pragma once

#include <stdexcept>
#include <string>

namespace aop {

// Raised for malformed input: arity mismatches, bad syntax, invalid files.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aop
