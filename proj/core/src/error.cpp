#include "motive_forge/error.hpp"

namespace motive_forge {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kRankOutOfRange: return "RankOutOfRange";
    case ErrorCode::kWeylCapExceeded: return "WeylCapExceeded";
    case ErrorCode::kInvalidSubset: return "InvalidSubset";
    case ErrorCode::kOpaqueTensor: return "OpaqueTensor";
    case ErrorCode::kNotPureEven: return "NotPureEven";
    case ErrorCode::kTwistExceedsDimension: return "TwistExceedsDimension";
    case ErrorCode::kNegativeTwist: return "NegativeTwist";
    case ErrorCode::kNegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::kNonProperFiber: return "NonProperFiber";
    case ErrorCode::kNonSmoothBase: return "NonSmoothBase";
    case ErrorCode::kEtaleWithoutOverride: return "EtaleWithoutOverride";
    case ErrorCode::kNonTateComponent: return "NonTateComponent";
    case ErrorCode::kInconsistentIntersections: return "InconsistentIntersections";
    case ErrorCode::kInvalidLattice: return "InvalidLattice";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kFunctorMismatch: return "FunctorMismatch";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace motive_forge
