#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "recip/error.hpp"

namespace recip::testing {

inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvariantFailure;
}

}  // namespace recip::testing
