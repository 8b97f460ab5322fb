#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cospectra {

// Base class for every error the library raises.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input data (bad coordinates, malformed sets, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Connection set contains the group identity.
struct ContainsIdentityError : ValidationError {
  using ValidationError::ValidationError;
};

// Connection set is not closed under negation.
struct NotInverseClosedError : ValidationError {
  using ValidationError::ValidationError;
};

// Operation requires a group of exponent at most two.
struct NotCubelikeError : Error {
  using Error::Error;
};

// A dense operation exceeded its vertex cap.
struct TooLargeError : Error {
  using Error::Error;
};

// Numeric eigenvalue clustering cannot separate clusters at the given
// tolerance.
struct ClusterAmbiguityError : Error {
  using Error::Error;
};

// A cyclotomic value was used as an integer but is not rational.
struct NonRationalValueError : Error {
  using Error::Error;
};

// Construction parameter out of range.
struct BadDimensionError : Error {
  using Error::Error;
};

// Cycle length of a Cartesian cycle product must be odd.
struct EvenCycleError : Error {
  using Error::Error;
};

// Exact integer arithmetic left the 64-bit range.
struct OverflowError : Error {
  using Error::Error;
};

// Text input could not be parsed; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cospectra
