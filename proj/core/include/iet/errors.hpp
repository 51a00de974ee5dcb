#pragma once

#include <stdexcept>
#include <string>

namespace iet {

// Text (scalar literal, spec file) that does not match its grammar or schema.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input data, a violated construction invariant, or a point outside
// the domain of the requested operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A scan ran out of its per-call step or cell budget before finishing.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sign resolution reached max_bits without separating the enclosure from
// zero.  For a valid basis this indicates the value is too close to zero for
// the configured ladder; it is never silently converted into a guess.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace iet
