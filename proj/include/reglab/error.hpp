#pragma once

#include <stdexcept>
#include <string>

namespace reglab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or precondition-violating input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Subscheme enumeration would exceed the configured degree cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NonCurvilinear : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class CenterMeetsScheme : public Error {
 public:
  using Error::Error;
};

class CenterMeetsCurve : public Error {
 public:
  using Error::Error;
};

class CurveInSubspace : public Error {
 public:
  using Error::Error;
};

/// The interpolation system of the three-monomial separator construction is
/// unsolvable for the given points.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

/// A generator could not satisfy its planted features within the redraw budget.
class RedrawsExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace reglab
