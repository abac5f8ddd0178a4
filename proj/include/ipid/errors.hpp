#pragma once

#include <stdexcept>
#include <string>

namespace ipid {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An observation whose type or value does not belong to the support of the
// density it was evaluated against.
struct InvalidObservation : Error {
  using Error::Error;
};

// Two densities whose supports are incompatible (e.g. Gaussian vs Poisson).
struct InvalidPair : Error {
  using Error::Error;
};

// Periodic laws that cannot be combined (period mismatch).
struct IncompatibleLaws : Error {
  using Error::Error;
};

// Invalid configuration or operation input (bad threshold, empty sequence,
// malformed parameter curve, inconsistent run setup).
struct ConfigError : Error {
  using Error::Error;
};

// Malformed input data (bad CSV/NDJSON row, value outside family support).
struct DataError : Error {
  using Error::Error;
};

}  // namespace ipid
