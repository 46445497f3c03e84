#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "corebound/lattice.hpp"
#include "corebound/rays.hpp"
#include "corebound/setsystem.hpp"

namespace corebound {

enum class CollectionKind { irredundant, weber, grabisch_xie, custom };

std::string_view to_string(CollectionKind kind);
/// Accepts the names produced by to_string plus "gx". Throws MalformedDocument.
CollectionKind parse_collection_kind(std::string_view name);

/// Coalitions whose core inequalities become equalities. The grand coalition
/// is never a member.
struct NormalCollection {
  std::vector<Coalition> sets;
  CollectionKind kind = CollectionKind::custom;

  /// The sets form a chain under inclusion, in the listed order.
  bool is_nested() const;
  bool operator==(const NormalCollection&) const = default;
};

/// Irredundant normal sets of the downset lattice of `p`: repeatedly drop the
/// players that are both minimal and maximal among those left, emit the
/// downset (in the whole poset) of the remaining minimal players, and remove
/// them. Produces exactly height(p) sets.
NormalCollection algo1_irredundant(const PlayerPoset& p);

/// Cumulative unions N_1, N_1 | N_2, ... of an irredundant collection.
/// Errors: WrongCollectionKind.
NormalCollection weber_collection(const NormalCollection& irredundant);

/// Cumulative unions of the levels L_1, ..., L_{q-1}.
NormalCollection grabisch_xie_collection(const PlayerPoset& p);

/// The equality x(s) = 0 removes the ray: plus in s, minus not in s.
bool kills(const OrderedPairRay& ray, Coalition s);

/// Adding x(N_k) = 0 for every member to C(0) leaves only the origin.
/// Errors: SetNotFeasible, GrandCoalitionInCollection.
bool validate_normal(const SetSystem& f, const NormalCollection& candidate);

struct LiftStep {
  Coalition original;
  /// Replacement in F, or nullopt when no feasible superset preserves the kills.
  std::optional<Coalition> chosen;
  /// Other minimum-cardinality choices that would have served equally.
  std::vector<Coalition> alternatives;
};

struct LiftResult {
  NormalCollection collection;
  /// One entry per member of the candidate that was not already in F.
  std::vector<LiftStep> replacements;
  /// Sets appended by the repair loop, one per surviving ray.
  std::vector<Coalition> appended;
  bool exceeds_candidate_size = false;
};

/// Moves a collection computed on closure(F) into F. Members outside F are
/// replaced by a smallest member of F containing them that kills every ray
/// the original killed (ties broken by canonical order). If the result does
/// not bound the core, the smallest killing set of each surviving ray is
/// appended. `rays` are the extremal rays of C(0) for F. Errors: NoFeasibleLift.
LiftResult lift_collection(const SetSystem& f, const NormalCollection& candidate,
                           std::span<const OrderedPairRay> rays);

}  // namespace corebound
