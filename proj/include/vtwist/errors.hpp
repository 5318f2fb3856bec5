#pragma once

#include <stdexcept>
#include <string>

namespace vtwist {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value that should be an integer or a rational with small height is not.
struct RecognitionError : Error {
  using Error::Error;
};

// Numerics could not separate the answer from zero at the maximum precision.
struct PrecisionError : Error {
  using Error::Error;
};

struct SingularCurveError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct InadmissibleConductorError : Error {
  using Error::Error;
};

struct ReducibleCubicError : Error {
  using Error::Error;
};

struct NonCyclicFieldError : Error {
  using Error::Error;
};

struct NoMatchingCharacterError : Error {
  using Error::Error;
};

// An identity that must hold exactly failed: wrong root number, wrong
// conductor, inconsistent exact data. Never retried.
struct TheoryAlarm : Error {
  using Error::Error;
};

}  // namespace vtwist
