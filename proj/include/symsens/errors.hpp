#pragma once

#include <stdexcept>
#include <string>

namespace symsens {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested size exceeds an enumeration or full-table cap.
struct SizeError : Error {
  using Error::Error;
};

/// Malformed bit string, truth-table file, or export.
struct FormatError : Error {
  using Error::Error;
};

/// Argument outside the operation's domain (e.g. n = 0 for counts).
struct DomainError : Error {
  using Error::Error;
};

/// Rational generating function with a zero constant term in the denominator.
struct SingularError : Error {
  using Error::Error;
};

struct BoundsError : Error {
  using Error::Error;
};

} // namespace symsens
