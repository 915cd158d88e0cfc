#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hard size limit was exceeded (modulus cap, oracle enumeration caps).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A configurable work budget was exceeded before starting an expensive
/// computation. The message names the budget and the requested work.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley
