#pragma once

#include <stdexcept>
#include <string>

namespace dinv {

/// Raised for caller-supplied values that violate an operation's preconditions
/// (non-coprime pairs, out-of-range indices, malformed polynomials). The CLI
/// maps this to exit status 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dinv
