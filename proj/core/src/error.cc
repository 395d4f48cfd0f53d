#include "spc/error.h"

namespace spc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kUnreachable: return "unreachable";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kSupplierExhausted: return "supplier-exhausted";
    case ErrorCode::kAssumptionViolated: return "assumption-violated";
    case ErrorCode::kStructuralInconsistency: return "structural-inconsistency";
    case ErrorCode::kClaimFailed: return "claim-failed";
    case ErrorCode::kUnsupportedGraph: return "unsupported-graph";
    case ErrorCode::kCongestionViolation: return "congestion-violation";
    case ErrorCode::kCapExceeded: return "cap-exceeded";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kIterationCap: return "iteration-cap";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace spc
