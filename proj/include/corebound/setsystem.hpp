#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace corebound {

/// Largest supported player count. Coalitions are bitmasks and the closure of a
/// system can reach 2^n sets.
inline constexpr int kMaxPlayers = 16;

/// A subset of the players. Bit i stands for player i+1; all indices taken by
/// this class are 0-based.
class Coalition {
 public:
  using Mask = std::uint32_t;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask bits) : bits_(bits) {}

  /// Builds a coalition from 1-based player labels.
  static Coalition from_labels(std::initializer_list<int> labels);
  static constexpr Coalition full(int n) { return Coalition((Mask{1} << n) - 1); }
  static constexpr Coalition singleton(int player) { return Coalition(Mask{1} << player); }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int player) const { return (bits_ >> player) & 1U; }
  constexpr bool is_subset_of(Coalition other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_strict_subset_of(Coalition other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(Coalition other) const { return (bits_ & other.bits_) != 0; }

  /// 0-based members in increasing order.
  std::vector<int> players() const;
  /// 1-based labels, e.g. "134" for n < 10 and "{1,3,4}" otherwise.
  std::string label(int n) const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.bits_ | b.bits_); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Coalition a, Coalition b) = default;

  /// Canonical order: cardinality first, then numeric bit value.
  friend constexpr std::strong_ordering operator<=>(Coalition a, Coalition b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
};

class PlayerUniverse {
 public:
  /// Throws UniverseTooLarge for n > kMaxPlayers and MalformedDocument for n < 1.
  explicit PlayerUniverse(int n);

  int size() const { return n_; }
  Coalition grand() const { return Coalition::full(n_); }
  bool operator==(const PlayerUniverse&) const = default;

 private:
  int n_;
};

/// Feasible coalitions, duplicate-free and sorted canonically. Always contains
/// the empty coalition and the grand coalition.
class SetSystem {
 public:
  /// Validates and sorts. Errors: MissingEmptySet, MissingGrandCoalition,
  /// DuplicateSet, PlayerOutOfRange.
  SetSystem(PlayerUniverse universe, std::vector<Coalition> sets);

  const PlayerUniverse& universe() const { return universe_; }
  int players() const { return universe_.size(); }
  Coalition grand() const { return universe_.grand(); }
  std::span<const Coalition> sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  bool contains(Coalition s) const;
  std::optional<std::size_t> index_of(Coalition s) const;

  bool operator==(const SetSystem&) const = default;

 private:
  PlayerUniverse universe_;
  std::vector<Coalition> sets_;
};

SetSystem power_set(int n);

/// Strictly increasing sequence of coalitions from the empty set to N.
struct ChainOfSets {
  std::vector<Coalition> sets;

  /// True when every step adds exactly one player.
  bool has_unit_steps() const;
  /// The player order induced by a unit-step chain (0-based players).
  std::vector<int> induced_order() const;

  bool operator==(const ChainOfSets&) const = default;
};

struct StructureReport {
  bool is_regular = false;
  bool is_weakly_union_closed = false;
  bool is_union_intersection_closed = false;
  int height = 0;
  int closure_height = 0;
};

/// Covering relation of (F, subset): covers[k] lists indices (into F.sets()) of
/// the sets covering F.sets()[k], in canonical order.
std::vector<std::vector<std::size_t>> covering_relation(const SetSystem& f);

bool is_union_intersection_closed(const SetSystem& f);
bool is_weakly_union_closed(const SetSystem& f);
bool is_regular(const SetSystem& f);
/// Length of a longest chain from the empty set to N.
int height(const SetSystem& f);

StructureReport classify(const SetSystem& f);

/// Smallest union- and intersection-closed system containing f.
SetSystem closure(const SetSystem& f);

/// All maximal chains from the empty set to N, in lexicographic order of their
/// successive coalitions.
std::vector<ChainOfSets> maximal_chains(const SetSystem& f);

/// Maximal chains of f that contain every coalition of `required`.
std::vector<ChainOfSets> maximal_chains_through(const SetSystem& f,
                                                std::span<const Coalition> required);

}  // namespace corebound
