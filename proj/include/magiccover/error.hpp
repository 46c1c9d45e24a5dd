#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magiccover {

enum class ErrorCode {
  DuplicateVertex,
  UnknownEndpoint,
  LoopEdge,
  DuplicateEdge,
  InvalidVertexId,
  NotBijective,
  WrongDomain,
  ParamOutOfRange,
  UnknownVertex,
  NotInduced,
  ParityViolation,
  PhiNotConstant,
  PatternTooLarge,
  CopyLimitExceeded,
  UnknownElement,
  NoConstruction,
  ParseError,
  IoError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidVertexId: return "InvalidVertexId";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::WrongDomain: return "WrongDomain";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotInduced: return "NotInduced";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::PhiNotConstant: return "PhiNotConstant";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::CopyLimitExceeded: return "CopyLimitExceeded";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NoConstruction: return "NoConstruction";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code; the
/// message holds the witness (offending id, label, parameter) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace magiccover
