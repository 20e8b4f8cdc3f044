#pragma once

#include <stdexcept>
#include <string>

namespace recip {

enum class ErrorCode {
  PrecisionExhausted,
  NotAUnit,
  ZeroInput,
  HenselHypothesisFailed,
  PrecisionLoss,
  NotPrime,
  NotIrreducible,
  NotEisenstein,
  NotPrincipalUnit,
  NotInIdeal,
  BelowThreshold,
  PIsTwo,
  OracleUnavailable,
  BudgetExceeded,
  UnsupportedSplitting,
  NormUnitNotPrincipal,
  Degenerate,
  NotDeepEnough,
  ComplexPlace,
  BadInput,
  UnsupportedField,
  ConstantDifferential,
  InvariantFailure,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this one exception type; the
// code is stable and is what tests and the CLI branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace recip
