#include "polya/error.hpp"

namespace polya {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::ProbabilityMass: return "ProbabilityMass";
    case ErrorKind::ZeroActivityRule: return "ZeroActivityRule";
    case ErrorKind::NegativeActivity: return "NegativeActivity";
    case ErrorKind::NegativeInitial: return "NegativeInitial";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidColour: return "InvalidColour";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NonRealTop: return "NonRealTop";
    case ErrorKind::AssumptionsFail: return "AssumptionsFail";
    case ErrorKind::DegenerateNormalization: return "DegenerateNormalization";
    case ErrorKind::AlreadyExtinct: return "AlreadyExtinct";
    case ErrorKind::ZeroSteps: return "ZeroSteps";
    case ErrorKind::NotASlowedProduct: return "NotASlowedProduct";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace polya
