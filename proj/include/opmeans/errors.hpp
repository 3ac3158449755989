#pragma once

#include <stdexcept>
#include <string>

namespace opmeans {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape disagreements between operands or with a descriptor.
struct DimensionError : Error {
  using Error::Error;
};

// Input claimed Hermitian but the symmetry defect exceeds tolerance.
struct NotHermitianError : Error {
  using Error::Error;
};

// Spectrum outside the domain of a scalar function, loss of positive
// definiteness, or a violated spectral precondition.
struct DomainError : Error {
  using Error::Error;
};

// Bad interval or weight parameters (s > t, nonpositive endpoints, ...).
struct IntervalError : Error {
  using Error::Error;
};

// Suite configuration problems (unknown check id, malformed grids, ...).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace opmeans
