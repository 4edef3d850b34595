#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace schreier {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotALimit,
  NotAMember,
  NotMaximal,
  NotSuccessor,
  NotASpread,
  InternalInconsistency,
  ResourceLimit,
  SignsMissing,
  NotOnSphere,
  UnsupportedOrder,
  UnsupportedExponent,
  NotAPerfectPower,
  MissingBasisPair,
  NotDiagonal,
  IsPlusMinusE1,
  WeightsNotNormalized,
  ConstructionFailed,
  ExcludedInput,
  OracleMismatch,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a stable code and machine-readable details.
///
/// `details()` is merged into the CLI error object next to `"code"`, so keys
/// there should be short and stable (`"i"`, `"index"`, `"image"`, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::ordered_json details = nlohmann::ordered_json::object());

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::ordered_json& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  nlohmann::ordered_json details_;
};

}  // namespace schreier
