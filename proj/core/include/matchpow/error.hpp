#pragma once

#include <stdexcept>

namespace matchpow {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input data (bad vertex index, parse failure).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A stated hypothesis of an operation does not hold for the given input
/// (not a leaf, not a forest, mixed generation degrees, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured time or node budget ran out before the computation finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace matchpow
