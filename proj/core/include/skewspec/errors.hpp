// Copyright (c) the skewspec contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SKEWSPEC_ERRORS_HPP
#define SKEWSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewspec {

// Base class for everything thrown by this library. Validation failures
// (bad shapes, bad parameters) and numerical breakdowns are kept as
// distinct branches so drivers can map them to different exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input validation.
struct ValidationError : Error {
  using Error::Error;
};
struct NotSquare : ValidationError {
  using ValidationError::ValidationError;
};
struct NotAntisymmetric : ValidationError {
  using ValidationError::ValidationError;
};
struct NotNormal : ValidationError {
  using ValidationError::ValidationError;
};
struct TooSmall : ValidationError {
  using ValidationError::ValidationError;
};
struct TooLarge : ValidationError {
  using ValidationError::ValidationError;
};
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct InvalidParams : ValidationError {
  using ValidationError::ValidationError;
};
struct GridMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct NotEnoughPeaks : ValidationError {
  using ValidationError::ValidationError;
};
struct RangeTooSmall : ValidationError {
  using ValidationError::ValidationError;
};
struct OutOfValidatedRange : ValidationError {
  using ValidationError::ValidationError;
};
struct WindowExhausted : ValidationError {
  using ValidationError::ValidationError;
};
struct ConfigError : ValidationError {
  using ValidationError::ValidationError;
};

// Numerical breakdown.
struct NumericalError : Error {
  using Error::Error;
};
struct PairingFailure : NumericalError {
  using NumericalError::NumericalError;
};
struct ResidualTooLarge : NumericalError {
  using NumericalError::NumericalError;
};
struct MismatchBeyondTol : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace skewspec

#endif  // SKEWSPEC_ERRORS_HPP
