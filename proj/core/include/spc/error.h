#ifndef SPC_ERROR_H_
#define SPC_ERROR_H_

#include <stdexcept>
#include <string>

namespace spc {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kUnreachable,
  kPrecondition,
  kSupplierExhausted,
  kAssumptionViolated,
  kStructuralInconsistency,
  kClaimFailed,
  kUnsupportedGraph,
  kCongestionViolation,
  kCapExceeded,
  kBudgetExceeded,
  kIterationCap,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library. Outcomes such as "infeasible" are
// returned as data, never thrown.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spc

#endif  // SPC_ERROR_H_
