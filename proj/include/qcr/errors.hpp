#pragma once

#include <stdexcept>

namespace qcr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown register label, duplicate label, or a layout missing required roles.
struct LabelError : Error {
  using Error::Error;
};

// Shape mismatch or a state exceeding the configured dimension cap.
struct DimensionError : Error {
  using Error::Error;
};

struct NotUnitaryError : Error {
  using Error::Error;
};

// Matrix fails the Hermitian / PSD / pure-vs-mixed requirement of an operation.
struct NotDensityError : Error {
  using Error::Error;
};

// A protocol input did not pass QCR verification and no waiver was given.
struct CertificationError : Error {
  using Error::Error;
};

// Malformed state file or report document.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace qcr
