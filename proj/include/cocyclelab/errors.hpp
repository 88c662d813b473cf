#pragma once

#include <stdexcept>
#include <string>

namespace cocyclelab {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidType : Error {
  using Error::Error;
};

struct ZeroRoot : Error {
  using Error::Error;
};

struct NotInvolution : Error {
  using Error::Error;
};

struct InvalidSignature : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DegenerateTuple : Error {
  using Error::Error;
};

struct MultipleInfinities : Error {
  using Error::Error;
};

struct SamplingFailure : Error {
  using Error::Error;
};

struct DegreeTooLarge : Error {
  using Error::Error;
};

struct InvalidCheck : Error {
  using Error::Error;
};

}  // namespace cocyclelab
