#ifndef G2K_ERRORS_HPP
#define G2K_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2k {

enum class ErrorCode {
  DivisionByZero,
  DegenerateResultant,
  DegreeTooSmall,
  UndefinedOrder,
  DuplicateNode,
  DuplicateBranchPoint,
  NotOnCurve,
  SamplingFailed,
  Unsupported,
  MultiplicityUnsupported,
  NotSplit,
  ZeroCubic,
  UnsupportedChart,
  CurveMismatch,
  DegreeDrop,
  ChartUnsupported,
  TooManyDegeneratePoints,
  GridDegeneracy,
  VandermondeZero,
  DenominatorZero,
  IdentityFailed,
  InexactDivision,
  InvariantViolation,
  ParseError,
  InvalidArgument,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegenerateResultant: return "DegenerateResultant";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::UndefinedOrder: return "UndefinedOrder";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DuplicateBranchPoint: return "DuplicateBranchPoint";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::MultiplicityUnsupported: return "MultiplicityUnsupported";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::ZeroCubic: return "ZeroCubic";
    case ErrorCode::UnsupportedChart: return "UnsupportedChart";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::DegreeDrop: return "DegreeDrop";
    case ErrorCode::ChartUnsupported: return "ChartUnsupported";
    case ErrorCode::TooManyDegeneratePoints: return "TooManyDegeneratePoints";
    case ErrorCode::GridDegeneracy: return "GridDegeneracy";
    case ErrorCode::VandermondeZero: return "VandermondeZero";
    case ErrorCode::DenominatorZero: return "DenominatorZero";
    case ErrorCode::IdentityFailed: return "IdentityFailed";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace g2k

#endif  // G2K_ERRORS_HPP
