#pragma once

#include <stdexcept>

namespace immaculate {

// Internal-consistency failure: a condition the construction is supposed to
// guarantee did not hold. Caller errors use std::invalid_argument instead.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace immaculate
