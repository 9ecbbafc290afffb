#include "bgeom/error.hpp"

namespace bgeom {

std::string_view error_code_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownCurveName: return "UNKNOWN_CURVE_NAME";
    case ErrorCode::InvalidMultiplicity: return "INVALID_MULTIPLICITY";
    case ErrorCode::InvalidBase: return "INVALID_BASE";
    case ErrorCode::ModelMismatch: return "MODEL_MISMATCH";
    case ErrorCode::SingularGram: return "SINGULAR_GRAM";
    case ErrorCode::NotExceptional: return "NOT_EXCEPTIONAL";
    case ErrorCode::NotPseudoeffective: return "NOT_PSEUDOEFFECTIVE";
    case ErrorCode::NotLogResolution: return "NOT_LOG_RESOLUTION";
    case ErrorCode::CriterionMismatch: return "CRITERION_MISMATCH";
    case ErrorCode::NotMinusOneCurve: return "NOT_MINUS_ONE_CURVE";
    case ErrorCode::NotNef: return "NOT_NEF";
    case ErrorCode::PreconditionUnmet: return "PRECONDITION_UNMET";
    case ErrorCode::EParamInvalid: return "E_PARAM_INVALID";
    case ErrorCode::InvalidPair: return "INVALID_PAIR";
    case ErrorCode::InternalConsistency: return "INTERNAL_CONSISTENCY";
    case ErrorCode::RankLimitExceeded: return "RANK_LIMIT_EXCEEDED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace bgeom
