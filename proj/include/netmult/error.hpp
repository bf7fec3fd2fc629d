#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netmult {

enum class ErrorCode {
  IndexOutOfRange,
  DuplicateLabel,
  EmptyNetwork,
  ClosureCapExceeded,
  LabelMismatch,
  NotBalanced,
  TooLarge,
  DimMismatch,
  SizeMismatch,
  DegenerateDraw,
  NonSquareBlockDim,
  NotConstructible,
  InconsistentTrace,
  NonFinite,
  ParseError,
  InvalidArgument,
  Io,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::EmptyNetwork: return "EmptyNetwork";
    case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
    case ErrorCode::NonSquareBlockDim: return "NonSquareBlockDim";
    case ErrorCode::NotConstructible: return "NotConstructible";
    case ErrorCode::InconsistentTrace: return "InconsistentTrace";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Thrown by every operation in the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace netmult
