#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "corebound/normal.hpp"
#include "corebound/polyhedra.hpp"
#include "corebound/setsystem.hpp"

namespace corebound {

/// A game on a set system: one exact value per feasible coalition, v(empty) = 0.
class Game {
 public:
  /// `values` follows the canonical order of system.sets(). Errors: MissingValue,
  /// MalformedDocument when v(empty) is not zero.
  Game(SetSystem system, std::vector<Rational> values);
  /// Errors: MissingValue, SetNotFeasible for keys outside the system.
  static Game from_map(SetSystem system, const std::map<Coalition, Rational>& values);

  const SetSystem& system() const { return system_; }
  int players() const { return system_.players(); }
  std::span<const Rational> values() const { return values_; }
  /// Errors: SetNotFeasible.
  const Rational& value(Coalition s) const;

 private:
  SetSystem system_;
  std::vector<Rational> values_;
};

struct MarginalVector {
  ChainOfSets chain;
  RationalVector payoff;
};

/// x(S) >= v(S) for S outside the collection, x(N_k) = v(N_k) for members and
/// x(N) = v(N). The empty coalition contributes no row. Errors: SetNotFeasible.
HPolyhedron<Rational> build_restricted_core(const Game& v, const NormalCollection& nc);

/// Errors: ChainNotRegularSteps, SetNotFeasible for chain members outside F.
MarginalVector marginal_vector(const Game& v, const ChainOfSets& chain);

/// Distinct marginal vectors of the maximal chains through every member of
/// the collection, sorted. Errors: CollectionNotNested, ChainNotRegularSteps,
/// NoRestrictedChain.
VRepresentation<Rational> restricted_weber(const Game& v, const NormalCollection& nc);

/// Supermodularity over all pairs of feasible coalitions. Errors: NotClosed.
bool is_convex(const Game& v);

enum class WitnessKind { none, point, direction };
std::string_view to_string(WitnessKind kind);

struct InclusionVerdict {
  bool holds = false;
  std::optional<RationalVector> witness;
  WitnessKind witness_kind = WitnessKind::none;
  VRepresentation<Rational> core;
  VRepresentation<Rational> weber;
};

/// Whether the restricted core lies inside the restricted Weber set. An
/// unbounded core fails with one of its directions as witness; an empty core
/// holds trivially.
InclusionVerdict verify_inclusion(const Game& v, const NormalCollection& nc);

}  // namespace corebound
