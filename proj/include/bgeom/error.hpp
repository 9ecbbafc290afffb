#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgeom {

enum class ErrorCode {
  UnknownCurveName,
  InvalidMultiplicity,
  InvalidBase,
  ModelMismatch,
  SingularGram,
  NotExceptional,
  NotPseudoeffective,
  NotLogResolution,
  CriterionMismatch,
  NotMinusOneCurve,
  NotNef,
  PreconditionUnmet,
  EParamInvalid,
  InvalidPair,
  InternalConsistency,
  RankLimitExceeded,
  ParseError,
  ValidationError,
};

/// Stable machine-readable identifier, e.g. "NOT_PSEUDOEFFECTIVE".
std::string_view error_code_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bgeom
