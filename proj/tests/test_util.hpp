#pragma once

#include <doctest.h>

#include <utility>

#include "cayley/error.hpp"

namespace cayley::testutil {

// Runs f, which must throw a cayley::Error, and returns its code.
template <class F>
Errc errc_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE_MESSAGE(false, "expected a cayley::Error, nothing was thrown");
  return Errc::parse_error;  // unreachable: REQUIRE aborts the test case
}

}  // namespace cayley::testutil
