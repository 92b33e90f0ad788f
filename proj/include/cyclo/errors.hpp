// errors.hpp - exception types shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A box that is not addable (resp. removable) was added (resp. removed).
struct InvalidMove : Error {
  using Error::Error;
};

// Malformed input: bad JSON, out-of-range indices, non-partitions.
struct InputError : Error {
  using Error::Error;
};

// Two signature entries with equal c-values while strict tie mode is on.
struct AmbiguityError : Error {
  using Error::Error;
};

// An operator would leave the truncated Fock space.
struct TruncationError : Error {
  using Error::Error;
};

// The operation is not defined for these parameters (e.g. irrational kappa).
struct UnsupportedParameter : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace cyclo
