#pragma once

#include <stdexcept>
#include <string>

namespace grunbaum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The body's affine hull has dimension below its ambient dimension.
class DegenerateBody : public Error {
 public:
  using Error::Error;
};

/// The cutting hyperplane misses the centroid by more than the tolerance.
class CentroidMismatch : public Error {
 public:
  using Error::Error;
};

class MethodUnsupported : public Error {
 public:
  using Error::Error;
};

/// A lemma was invoked on data that violates one of its hypotheses.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class RatioUnattainable : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON, config or command-line input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace grunbaum
