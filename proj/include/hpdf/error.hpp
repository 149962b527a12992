#pragma once

#include <stdexcept>
#include <string>

namespace hpdf {

enum class Errc {
  // groups
  NonAssociative,
  NoIdentity,
  NoInverse,
  ElementOutOfRange,
  BadDescriptor,
  // families
  GroupMismatch,
  NotASubgroup,
  NotAPdf,
  // rings
  NotPrime,
  EvenOrder,
  NotAField,
  // constructions
  NotADifferenceSet,
  NotHadamard,
  BadResidueClass,
  ProjectionMismatch,
  ParameterMismatch,
  NotAnEndomorphism,
  ConditionFails,
  RecipeInvariantViolated,
  NoValidY,
  DivisorTooSmall,
  NoHdsAvailable,
  // search
  OrderMismatch,
  // io
  ParseError,
};

const char *errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace hpdf
