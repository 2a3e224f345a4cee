#pragma once

#include <stdexcept>
#include <string>

namespace gbihom {

/// Base class of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define GBIHOM_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  };

GBIHOM_DEFINE_ERROR(DivisionByZero)
GBIHOM_DEFINE_ERROR(FieldMismatch)
GBIHOM_DEFINE_ERROR(NoSuchRoot)
GBIHOM_DEFINE_ERROR(DimensionMismatch)
GBIHOM_DEFINE_ERROR(NotInAlgebra)
GBIHOM_DEFINE_ERROR(NotInSupport)
GBIHOM_DEFINE_ERROR(AsymmetricSupport)
GBIHOM_DEFINE_ERROR(MissingComponent)
GBIHOM_DEFINE_ERROR(TheoremViolation)
GBIHOM_DEFINE_ERROR(HypothesisUnmet)
GBIHOM_DEFINE_ERROR(TooLarge)
GBIHOM_DEFINE_ERROR(RelationViolation)
// Input that is well-formed but mathematically unusable (non-prime modulus,
// singular conjugator, non-bijective group map, ...).
GBIHOM_DEFINE_ERROR(InvalidInput)

#undef GBIHOM_DEFINE_ERROR

}  // namespace gbihom
