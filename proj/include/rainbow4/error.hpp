#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow4 {

enum class ErrorCode {
  kInvalidGraph,
  kFormat,
  kUnknownEdge,
  kPartialColoring,
  kSizeCapExceeded,
  kNotPlanar,
  kNotOuterplanar,
  kNotTwoConnected,
  kNotBipartite,
  kNotSubcubic,
  kInvalidDeclaredCycle,
  kDirectiveContradiction,
  kLayoutMismatch,
  kFMNotBipartite,
  kBoundViolated,
  kCaseExhaustion,
  kInvalidParams,
  kUnsupported,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; `code()` identifies the
// failure class so callers (color_auto, the CLI) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kFormat: return "FormatError";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kPartialColoring: return "PartialColoring";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kNotPlanar: return "NotPlanar";
    case ErrorCode::kNotOuterplanar: return "NotOuterplanar";
    case ErrorCode::kNotTwoConnected: return "NotTwoConnected";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kNotSubcubic: return "NotSubcubic";
    case ErrorCode::kInvalidDeclaredCycle: return "InvalidDeclaredCycle";
    case ErrorCode::kDirectiveContradiction: return "DirectiveContradiction";
    case ErrorCode::kLayoutMismatch: return "LayoutMismatch";
    case ErrorCode::kFMNotBipartite: return "FMNotBipartite";
    case ErrorCode::kBoundViolated: return "BoundViolated";
    case ErrorCode::kCaseExhaustion: return "CaseExhaustion";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kUnsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace rainbow4
