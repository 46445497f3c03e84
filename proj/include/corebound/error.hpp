#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace corebound {

enum class ErrorCode {
  // set systems
  MissingEmptySet,
  MissingGrandCoalition,
  DuplicateSet,
  PlayerOutOfRange,
  UniverseTooLarge,
  // posets and lattices
  NotAPartialOrder,
  NotClosed,
  HeightDeficient,
  // polyhedra
  DimensionMismatch,
  // rays
  NotRegular,
  NotWeaklyUnionClosed,
  // normal collections
  SetNotFeasible,
  NoFeasibleLift,
  GrandCoalitionInCollection,
  WrongCollectionKind,
  // games
  ChainNotRegularSteps,
  CollectionNotNested,
  NoRestrictedChain,
  MissingValue,
  // documents
  InvalidRational,
  MalformedDocument,
  // oracle disagreement; never expected in practice
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace corebound
