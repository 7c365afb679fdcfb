#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: out-of-range indices, mismatched dimension bounds, unknown names.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A construction needs simplices above the dimension bound of one of its inputs.
class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold (e.g. a marked edge
// is sent to a non-equivalence).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace hgc
