#pragma once

#include <stdexcept>
#include <string>

namespace horbit {

// Bad arguments: wrong dimensions, non-finite entries, elements outside the
// stated domain (not in K, not in p, not in M_K, ...).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numeric breakdown (vanishing pivots, overflowing scales).
struct NumericOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An integrand produced NaN; the message names the offending node.
struct PoisonedEstimate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A built-in self check failed (e.g. the phi-Jacobian Gram determinant).
struct InternalConsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace horbit
