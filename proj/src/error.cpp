#include "hpdf/error.hpp"

namespace hpdf {

const char *errc_name(Errc code)
{
  switch (code) {
  case Errc::NonAssociative: return "NonAssociative";
  case Errc::NoIdentity: return "NoIdentity";
  case Errc::NoInverse: return "NoInverse";
  case Errc::ElementOutOfRange: return "ElementOutOfRange";
  case Errc::BadDescriptor: return "BadDescriptor";
  case Errc::GroupMismatch: return "GroupMismatch";
  case Errc::NotASubgroup: return "NotASubgroup";
  case Errc::NotAPdf: return "NotAPdf";
  case Errc::NotPrime: return "NotPrime";
  case Errc::EvenOrder: return "EvenOrder";
  case Errc::NotAField: return "NotAField";
  case Errc::NotADifferenceSet: return "NotADifferenceSet";
  case Errc::NotHadamard: return "NotHadamard";
  case Errc::BadResidueClass: return "BadResidueClass";
  case Errc::ProjectionMismatch: return "ProjectionMismatch";
  case Errc::ParameterMismatch: return "ParameterMismatch";
  case Errc::NotAnEndomorphism: return "NotAnEndomorphism";
  case Errc::ConditionFails: return "ConditionFails";
  case Errc::RecipeInvariantViolated: return "RecipeInvariantViolated";
  case Errc::NoValidY: return "NoValidY";
  case Errc::DivisorTooSmall: return "DivisorTooSmall";
  case Errc::NoHdsAvailable: return "NoHdsAvailable";
  case Errc::OrderMismatch: return "OrderMismatch";
  case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string &what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

} // namespace hpdf
