#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polya {

enum class ErrorKind {
  SupportViolation,
  ProbabilityMass,
  ZeroActivityRule,
  NegativeActivity,
  NegativeInitial,
  LengthMismatch,
  InvalidColour,
  NotInjective,
  SizeCapExceeded,
  ConvergenceFailure,
  NonRealTop,
  AssumptionsFail,
  DegenerateNormalization,
  AlreadyExtinct,
  ZeroSteps,
  NotASlowedProduct,
  InvalidGraph,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace polya
