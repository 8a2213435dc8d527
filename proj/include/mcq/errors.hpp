#pragma once

#include <stdexcept>
#include <string>

namespace mcq {

// Malformed inputs (bad probabilities, overlapping segments, label mismatches).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed an explicit enumeration guard.
class size_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace mcq
