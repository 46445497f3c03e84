#pragma once

#include <span>
#include <utility>
#include <vector>

#include "corebound/setsystem.hpp"

namespace corebound {

/// A partial order on the players, stored as the full relation: below(j) is
/// the principal downset of j (every i with i <= j, j included). Players are
/// 0-based.
class PlayerPoset {
 public:
  /// Builds the order generated by strict relations (lower, upper), taking the
  /// transitive closure. Throws NotAPartialOrder on a cycle or a self-relation,
  /// PlayerOutOfRange on a bad index.
  static PlayerPoset from_relations(int n, std::span<const std::pair<int, int>> strict);

  /// Takes the relation as given and verifies reflexivity, antisymmetry and
  /// transitivity.
  PlayerPoset(int n, std::vector<Coalition> below);

  int size() const { return n_; }
  Coalition below(int j) const { return below_[j]; }
  bool leq(int i, int j) const { return below_[j].contains(i); }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  /// i is covered by j.
  bool covered_by(int i, int j) const;

  /// Downset generated by `s` in the whole poset.
  Coalition downset_of(Coalition s) const;
  Coalition minimal_elements(Coalition within) const;
  Coalition maximal_elements(Coalition within) const;

  /// Covering pairs (lower, upper), sorted by lower then upper.
  std::vector<std::pair<int, int>> covering_pairs() const;

  /// Length of a longest chain of players.
  int height() const;

  bool operator==(const PlayerPoset&) const = default;

 private:
  int n_;
  std::vector<Coalition> below_;
};

/// Levels L_1..L_q: L_1 are the minimal players, L_{k+1} the minimal players
/// once L_1..L_k are removed.
struct LevelPartition {
  std::vector<Coalition> levels;
};

/// Generating poset of a union/intersection-closed system of height n:
/// i <= j iff i belongs to every set containing j.
/// Errors: NotClosed, HeightDeficient.
PlayerPoset extract_poset(const SetSystem& f);

/// All downsets of the poset.
SetSystem downsets(const PlayerPoset& p);

LevelPartition level_partition(const PlayerPoset& p);

}  // namespace corebound
