#include "polyft/core.hpp"

namespace polyft {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::DegenerateDimension: return "DegenerateDimension";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::LPFailure: return "LPFailure";
    case ErrorCode::CoincidentSite: return "CoincidentSite";
    case ErrorCode::NotNorming: return "NotNorming";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::UnboundedIntersection: return "UnboundedIntersection";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::UnknownBall: return "UnknownBall";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::CaseFailed: return "CaseFailed";
    case ErrorCode::ConfirmationFailed: return "ConfirmationFailed";
  }
  return "Unknown";
}

bool is_numerical_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::LPFailure:
    case ErrorCode::EmptyIntersection:
    case ErrorCode::UnboundedIntersection:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ConfirmationFailed:
      return true;
    default:
      return false;
  }
}

bool all_finite(const Vector& v) { return v.allFinite(); }

}  // namespace polyft
