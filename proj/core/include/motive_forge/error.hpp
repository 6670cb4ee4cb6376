#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motive_forge {

enum class ErrorCode {
  kUnknownLabel,
  kRankOutOfRange,
  kWeylCapExceeded,
  kInvalidSubset,
  kOpaqueTensor,
  kNotPureEven,
  kTwistExceedsDimension,
  kNegativeTwist,
  kNegativeMultiplicity,
  kNonProperFiber,
  kNonSmoothBase,
  kEtaleWithoutOverride,
  kNonTateComponent,
  kInconsistentIntersections,
  kInvalidLattice,
  kOverflow,
  kFunctorMismatch,
  kParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every engine failure. `name()` is the stable identifier surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace motive_forge
