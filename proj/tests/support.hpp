#pragma once

#include "hpdf/error.hpp"

#include <doctest.h>

namespace testing {

// Runs f and returns the code of the hpdf::Error it throws.
template <class F> hpdf::Errc code_of(F &&f)
{
  try {
    f();
  } catch (const hpdf::Error &e) {
    return e.code();
  }
  FAIL("expected an hpdf::Error");
  return hpdf::Errc::ParseError;
}

} // namespace testing
