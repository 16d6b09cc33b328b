#ifndef PATGF_ERRORS_HPP
#define PATGF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace patgf {

enum class ErrorCode {
  kParseError,
  kInvalidPermutation,
  kLengthTooLarge,
  kDivisionByZero,
  kPoleAtOrigin,
  kDegenerateContinuedFraction,
  kIndexOutOfRange,
  kDuplicateEntries,
  kNot132Avoiding,
  kPreconditionViolated,
  kNonlinearSelfReference,
  kCyclicStateReference,
  kNonRationalState,
  kUnreducedHalfPower,
};

constexpr std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kLengthTooLarge: return "LengthTooLarge";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kPoleAtOrigin: return "PoleAtOrigin";
    case ErrorCode::kDegenerateContinuedFraction: return "DegenerateContinuedFraction";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDuplicateEntries: return "DuplicateEntries";
    case ErrorCode::kNot132Avoiding: return "Not132Avoiding";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNonlinearSelfReference: return "NonlinearSelfReference";
    case ErrorCode::kCyclicStateReference: return "CyclicStateReference";
    case ErrorCode::kNonRationalState: return "NonRationalState";
    case ErrorCode::kUnreducedHalfPower: return "UnreducedHalfPower";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code's name so that it survives printing.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(errorName(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errorName(code_); }

 private:
  ErrorCode code_;
};

}  // namespace patgf

#endif  // PATGF_ERRORS_HPP
