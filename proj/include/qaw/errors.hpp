#pragma once

#include <stdexcept>
#include <string>

namespace qaw {

// Error taxonomy for the evaluation and rewrite layers. Every throw site
// names the offending object so reports can point at the exact factor.
enum class ErrorCode {
  ZeroBase,
  ZeroDenominator,
  NonsquareValue,
  SamplingExhausted,
  DivergentDenominator,
  SpecialPointB,
  NoTerminatingSlot,
  TemplateMismatch,
  NotBalanced,
  ConstraintViolated,
  OddParity,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NonsquareValue: return "NonsquareValue";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::DivergentDenominator: return "DivergentDenominator";
    case ErrorCode::SpecialPointB: return "SpecialPointB";
    case ErrorCode::NoTerminatingSlot: return "NoTerminatingSlot";
    case ErrorCode::TemplateMismatch: return "TemplateMismatch";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::OddParity: return "OddParity";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qaw
