#include "schreier/error.hpp"

namespace schreier {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotALimit: return "NotALimit";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NotSuccessor: return "NotSuccessor";
    case ErrorCode::NotASpread: return "NotASpread";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::SignsMissing: return "SignsMissing";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::UnsupportedExponent: return "UnsupportedExponent";
    case ErrorCode::NotAPerfectPower: return "NotAPerfectPower";
    case ErrorCode::MissingBasisPair: return "MissingBasisPair";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::IsPlusMinusE1: return "IsPlusMinusE1";
    case ErrorCode::WeightsNotNormalized: return "WeightsNotNormalized";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ExcludedInput: return "ExcludedInput";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             nlohmann::ordered_json details)
    : std::runtime_error(message), code_(code), details_(std::move(details)) {}

}  // namespace schreier
