#pragma once

#include <stdexcept>
#include <string>

namespace flowshop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked 63-bit accumulation would wrap.
struct OverflowError : Error {
  using Error::Error;
};

// Malformed input document.
struct ParseError : Error {
  using Error::Error;
};

// Structurally well-formed input violating an invariant (negative duration,
// m < 1, out-of-range shop index, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Enumeration would exceed the configured state budget.
struct BudgetError : Error {
  using Error::Error;
};

// A solver ran past its deadline.
struct TimeoutError : Error {
  using Error::Error;
};

}  // namespace flowshop
