#pragma once

#include <stdexcept>
#include <string>

namespace foliage {

enum class ErrorKind {
  ContextMismatch,
  ArityMismatch,
  InvalidArgument,
  ParseError,
  FiberValidation,
  DegreeBound,
  NoSolution,
  NotRelativelyClosed,
  ResidencyFailure,
  NonConvergence,
  PoleProximity,
  WindingAmbiguity,
  SamplingFailure,
  NotIntegrable,
  FactorizationFailure,
  AnsatzFailure,
  DecompositionFailure,
  HypothesisViolation,
};

const char* to_string(ErrorKind kind);

// Every engine failure is reported through this one exception type. `witness`
// carries a human-readable certificate (an inconsistent row, a defect form)
// when the failure has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FiberValidation: return "FiberValidation";
    case ErrorKind::DegreeBound: return "DegreeBound";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NotRelativelyClosed: return "NotRelativelyClosed";
    case ErrorKind::ResidencyFailure: return "ResidencyFailure";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::WindingAmbiguity: return "WindingAmbiguity";
    case ErrorKind::SamplingFailure: return "SamplingFailure";
    case ErrorKind::NotIntegrable: return "NotIntegrable";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::AnsatzFailure: return "AnsatzFailure";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
  }
  return "Unknown";
}

}  // namespace foliage
