#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polylink {

enum class ErrorCode {
  MalformedInput,
  DanglingDart,
  LoopEdge,
  EulerViolation,
  OddVertex,
  NotFourValent,
  NotSimplePolytope,
  UnknownName,
  BadParameter,
  NotApplicable,
  ResultNotIdealRA,
  NotConjugated,
  TooLarge,
  WrongValenceProfile,
  InvalidStructure,
  DegenerateContraction,
  OverlappingQuadrangles,
  NotHub,
  BadFace,
  KindMismatch,
  NonTreeComponent,
  InvalidColoring,
  WrongKind,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DanglingDart: return "DanglingDart";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::OddVertex: return "OddVertex";
    case ErrorCode::NotFourValent: return "NotFourValent";
    case ErrorCode::NotSimplePolytope: return "NotSimplePolytope";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ResultNotIdealRA: return "ResultNotIdealRA";
    case ErrorCode::NotConjugated: return "NotConjugated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::WrongValenceProfile: return "WrongValenceProfile";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::DegenerateContraction: return "DegenerateContraction";
    case ErrorCode::OverlappingQuadrangles: return "OverlappingQuadrangles";
    case ErrorCode::NotHub: return "NotHub";
    case ErrorCode::BadFace: return "BadFace";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NonTreeComponent: return "NonTreeComponent";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::WrongKind: return "WrongKind";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polylink
