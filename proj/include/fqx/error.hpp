#pragma once

#include <stdexcept>
#include <string>

namespace fqx {

// Domain-level failure: bad inputs, violated preconditions, exceeded caps.
// The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fqx
