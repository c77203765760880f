#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fatlas {

enum class ErrorCode {
  LoopEdge,
  OutOfRange,
  InvalidParams,
  EmptyKeepSet,
  InvalidColoring,
  InvalidGrouping,
  IndexError,
  SizeCap,
  NoConvergence,
  ZeroFunction,
  Disconnected,
  EmptySide,
  NotRegularTuran,
  BracketViolation,
  DivisibilityError,
  TooManyClassesRemoved,
  ParameterSingularity,
  SupportViolation,
  NotRegular,
  ComplementDisconnected,
  UnequalClassesAtAlphaZero,
  IsolatedVertexInFactor,
  PreconditionViolated,
  NotFat,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EmptyKeepSet: return "EmptyKeepSet";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::InvalidGrouping: return "InvalidGrouping";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::NotRegularTuran: return "NotRegularTuran";
    case ErrorCode::BracketViolation: return "BracketViolation";
    case ErrorCode::DivisibilityError: return "DivisibilityError";
    case ErrorCode::TooManyClassesRemoved: return "TooManyClassesRemoved";
    case ErrorCode::ParameterSingularity: return "ParameterSingularity";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::ComplementDisconnected: return "ComplementDisconnected";
    case ErrorCode::UnequalClassesAtAlphaZero: return "UnequalClassesAtAlphaZero";
    case ErrorCode::IsolatedVertexInFactor: return "IsolatedVertexInFactor";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotFat: return "NotFat";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace fatlas
