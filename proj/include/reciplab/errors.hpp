#pragma once

#include <stdexcept>
#include <string>

namespace reciplab {

// Base of every error the library raises. Operations throw; they never
// return a sentinel value for an invalid parameter combination.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RECIPLAB_DEFINE_ERROR(Name)           \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  };

RECIPLAB_DEFINE_ERROR(ZeroDivisor)
RECIPLAB_DEFINE_ERROR(PoleAtOne)
RECIPLAB_DEFINE_ERROR(OrderMismatch)
RECIPLAB_DEFINE_ERROR(DegenerateParams)
RECIPLAB_DEFINE_ERROR(NotCoprime)
RECIPLAB_DEFINE_ERROR(OutOfDomain)
RECIPLAB_DEFINE_ERROR(PrecisionExhausted)
RECIPLAB_DEFINE_ERROR(BadModulus)
RECIPLAB_DEFINE_ERROR(CongruenceViolation)
RECIPLAB_DEFINE_ERROR(ToleranceUnreachable)
RECIPLAB_DEFINE_ERROR(NonPrimitive)
RECIPLAB_DEFINE_ERROR(EvenModulus)
RECIPLAB_DEFINE_ERROR(ConfigError)
RECIPLAB_DEFINE_ERROR(ParseError)

#undef RECIPLAB_DEFINE_ERROR

}  // namespace reciplab
