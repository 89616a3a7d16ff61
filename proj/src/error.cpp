#include "gstrata/error.hpp"

namespace gstrata {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::MixedAmbient: return "MixedAmbient";
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotInChart: return "NotInChart";
    case ErrorCode::NoCommonComplement: return "NoCommonComplement";
    case ErrorCode::EmptyStratum: return "EmptyStratum";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::NonPolynomialFit: return "NonPolynomialFit";
    case ErrorCode::NotEnoughSubspaces: return "NotEnoughSubspaces";
    case ErrorCode::MaxAttemptsExceeded: return "MaxAttemptsExceeded";
  }
  return "Unknown";
}

}  // namespace gstrata
