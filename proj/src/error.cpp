#include "corebound/error.hpp"

namespace corebound {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEmptySet: return "MissingEmptySet";
    case ErrorCode::MissingGrandCoalition: return "MissingGrandCoalition";
    case ErrorCode::DuplicateSet: return "DuplicateSet";
    case ErrorCode::PlayerOutOfRange: return "PlayerOutOfRange";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::HeightDeficient: return "HeightDeficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotWeaklyUnionClosed: return "NotWeaklyUnionClosed";
    case ErrorCode::SetNotFeasible: return "SetNotFeasible";
    case ErrorCode::NoFeasibleLift: return "NoFeasibleLift";
    case ErrorCode::GrandCoalitionInCollection: return "GrandCoalitionInCollection";
    case ErrorCode::WrongCollectionKind: return "WrongCollectionKind";
    case ErrorCode::ChainNotRegularSteps: return "ChainNotRegularSteps";
    case ErrorCode::CollectionNotNested: return "CollectionNotNested";
    case ErrorCode::NoRestrictedChain: return "NoRestrictedChain";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::InvalidRational: return "InvalidRational";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace corebound
