#pragma once

#include <stdexcept>
#include <string>

namespace acyclekit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A face tuple with repeated vertices, or an otherwise unusable face.
class MalformedFaceError : public Error {
 public:
  using Error::Error;
};

/// Input that violates a structural invariant: non-monotone weights,
/// missing sub-faces, missing weights, bad file records.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside of its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// beta_{d-1}(K) != 0, so no spanning acycle exists.
class NoSpanningAcycleError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class HypergraphDisconnectedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Brute-force enumeration would exceed its configured cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

/// The lifetime integral diverges because beta_d(K) != 0.
class DivergingIntegralError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two independent computations of the same quantity disagreed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace acyclekit
