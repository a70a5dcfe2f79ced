#pragma once

#include <stdexcept>
#include <string>

namespace ultra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ULTRA_DEFINE_ERROR(Name)                 \
  class Name : public Error {                    \
   public:                                       \
    using Error::Error;                          \
  };

ULTRA_DEFINE_ERROR(SyntaxError)
ULTRA_DEFINE_ERROR(AxiomViolation)
ULTRA_DEFINE_ERROR(NotUltrametric)
ULTRA_DEFINE_ERROR(TooSmall)
ULTRA_DEFINE_ERROR(UnknownPoint)
ULTRA_DEFINE_ERROR(NotExtremal)
ULTRA_DEFINE_ERROR(NotHamiltonian)
ULTRA_DEFINE_ERROR(NotInjective)
ULTRA_DEFINE_ERROR(NotCharacteristic)
ULTRA_DEFINE_ERROR(NotStrictlyBinary)
ULTRA_DEFINE_ERROR(Oversize)
ULTRA_DEFINE_ERROR(EmptySpace)
ULTRA_DEFINE_ERROR(BadEpsilon)
ULTRA_DEFINE_ERROR(NotSurjective)

// A guaranteed postcondition did not hold. Never expected.
ULTRA_DEFINE_ERROR(InternalError)

#undef ULTRA_DEFINE_ERROR

}  // namespace ultra
