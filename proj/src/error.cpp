#include "recip/error.hpp"

namespace recip {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PrecisionExhausted: return "PRECISION_EXHAUSTED";
    case ErrorCode::NotAUnit: return "NOT_A_UNIT";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::HenselHypothesisFailed: return "HENSEL_HYPOTHESIS_FAILED";
    case ErrorCode::PrecisionLoss: return "PRECISION_LOSS";
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::NotIrreducible: return "NOT_IRREDUCIBLE";
    case ErrorCode::NotEisenstein: return "NOT_EISENSTEIN";
    case ErrorCode::NotPrincipalUnit: return "NOT_PRINCIPAL_UNIT";
    case ErrorCode::NotInIdeal: return "NOT_IN_IDEAL";
    case ErrorCode::BelowThreshold: return "BELOW_THRESHOLD";
    case ErrorCode::PIsTwo: return "P_IS_TWO";
    case ErrorCode::OracleUnavailable: return "ORACLE_UNAVAILABLE";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::UnsupportedSplitting: return "UNSUPPORTED_SPLITTING";
    case ErrorCode::NormUnitNotPrincipal: return "NORM_UNIT_NOT_PRINCIPAL";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::NotDeepEnough: return "NOT_DEEP_ENOUGH";
    case ErrorCode::ComplexPlace: return "COMPLEX_PLACE";
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::UnsupportedField: return "UNSUPPORTED_FIELD";
    case ErrorCode::ConstantDifferential: return "CONSTANT_DIFFERENTIAL";
    case ErrorCode::InvariantFailure: return "INVARIANT_FAILURE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace recip
