#pragma once

#include <stdexcept>
#include <string>

namespace subconj {

// Raised for malformed user input: bad tokens, out-of-range generator
// indices, mismatched alphabets, violated operation preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace subconj
