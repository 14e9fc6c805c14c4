#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace bhmirror {

enum class ErrorCode {
  NonSquare,
  SingularExponentMatrix,
  NonPositiveWeight,
  DegenerateShape,
  SyntaxError,
  NotCyclicSplit,
  DegenerateRestriction,
  GroupTooLarge,
  NotAdmissible,
  GradingCollision,
  NotFermat,
  SideMismatch,
  ZOutOfRange,
  DualityViolation,
  NotCalabiYau,
  PatternMismatch,
  NonIntegralLattice,
};

inline const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::SingularExponentMatrix: return "SingularExponentMatrix";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DegenerateShape: return "DegenerateShape";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotCyclicSplit: return "NotCyclicSplit";
    case ErrorCode::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::GradingCollision: return "GradingCollision";
    case ErrorCode::NotFermat: return "NotFermat";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::ZOutOfRange: return "ZOutOfRange";
    case ErrorCode::DualityViolation: return "DualityViolation";
    case ErrorCode::NotCalabiYau: return "NotCalabiYau";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::NonIntegralLattice: return "NonIntegralLattice";
  }
  return "Unknown";
}

// Errors that signal a defect in this library rather than bad input.
inline bool is_internal(ErrorCode c) {
  return c == ErrorCode::DualityViolation || c == ErrorCode::DegenerateRestriction ||
         c == ErrorCode::NonIntegralLattice;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg, std::optional<std::size_t> pos = std::nullopt)
      : std::runtime_error(std::string(code_name(code)) + ": " + msg), code_(code), pos_(pos), detail_(msg) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return pos_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> pos_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace bhmirror
