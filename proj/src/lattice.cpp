#include "corebound/lattice.hpp"

#include <algorithm>

#include "corebound/error.hpp"

namespace corebound {

PlayerPoset PlayerPoset::from_relations(int n, std::span<const std::pair<int, int>> strict) {
  PlayerUniverse universe(n);
  std::vector<Coalition> below(n);
  for (int j = 0; j < n; ++j) below[j] = Coalition::singleton(j);
  for (auto [lo, hi] : strict) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n) {
      throw Error(ErrorCode::PlayerOutOfRange, "relation names a player outside 1.." + std::to_string(n));
    }
    if (lo == hi) throw Error(ErrorCode::NotAPartialOrder, "strict relation " + std::to_string(lo + 1) + " < itself");
    below[hi] = below[hi] | Coalition::singleton(lo);
  }
  // Warshall on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      if (below[j].contains(k)) below[j] = below[j] | below[k];
    }
  }
  return PlayerPoset(n, std::move(below));
}

PlayerPoset::PlayerPoset(int n, std::vector<Coalition> below) : n_(n), below_(std::move(below)) {
  PlayerUniverse universe(n);
  if (static_cast<int>(below_.size()) != n) {
    throw Error(ErrorCode::MalformedDocument, "relation must have one row per player");
  }
  for (int j = 0; j < n; ++j) {
    if (!below_[j].is_subset_of(universe.grand())) {
      throw Error(ErrorCode::PlayerOutOfRange, "relation row outside the player set");
    }
    if (!below_[j].contains(j)) throw Error(ErrorCode::NotAPartialOrder, "relation is not reflexive");
    for (int i : below_[j].players()) {
      if (i != j && below_[i].contains(j)) {
        throw Error(ErrorCode::NotAPartialOrder, "players " + std::to_string(i + 1) + " and " +
                                                     std::to_string(j + 1) + " are mutually below");
      }
      if (!below_[i].is_subset_of(below_[j])) {
        throw Error(ErrorCode::NotAPartialOrder, "relation is not transitive");
      }
    }
  }
}

bool PlayerPoset::covered_by(int i, int j) const {
  if (!less(i, j)) return false;
  for (int k : below_[j].players()) {
    if (k != i && k != j && less(i, k)) return false;
  }
  return true;
}

Coalition PlayerPoset::downset_of(Coalition s) const {
  Coalition out;
  for (int j : s.players()) out = out | below_[j];
  return out;
}

Coalition PlayerPoset::minimal_elements(Coalition within) const {
  Coalition out;
  for (int j : within.players()) {
    if ((below_[j] & within) == Coalition::singleton(j)) out = out | Coalition::singleton(j);
  }
  return out;
}

Coalition PlayerPoset::maximal_elements(Coalition within) const {
  Coalition out;
  const auto members = within.players();
  for (int j : members) {
    const bool dominated =
        std::any_of(members.begin(), members.end(), [&](int k) { return less(j, k); });
    if (!dominated) out = out | Coalition::singleton(j);
  }
  return out;
}

std::vector<std::pair<int, int>> PlayerPoset::covering_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (covered_by(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

int PlayerPoset::height() const { return static_cast<int>(level_partition(*this).levels.size()) - 1; }

PlayerPoset extract_poset(const SetSystem& f) {
  if (!is_union_intersection_closed(f)) {
    throw Error(ErrorCode::NotClosed, "set system is not closed under union and intersection");
  }
  const int n = f.players();
  const int h = height(f);
  if (h < n) {
    throw Error(ErrorCode::HeightDeficient,
                "lattice height " + std::to_string(h) + " is below the player count " + std::to_string(n));
  }
  std::vector<Coalition> below(n, f.grand());
  for (Coalition s : f.sets()) {
    for (int j : s.players()) below[j] = below[j] & s;
  }
  return PlayerPoset(n, std::move(below));
}

SetSystem downsets(const PlayerPoset& p) {
  // Grow downsets from the empty set by adding one minimal player of the
  // complement at a time; every downset is reached this way.
  const int n = p.size();
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<Coalition> out{Coalition()};
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Coalition s = out[k];
    for (int j = 0; j < n; ++j) {
      if (s.contains(j) || !p.below(j).is_subset_of(s | Coalition::singleton(j))) continue;
      const Coalition t = s | Coalition::singleton(j);
      if (!seen[t.bits()]) {
        seen[t.bits()] = true;
        out.push_back(t);
      }
    }
  }
  return SetSystem(PlayerUniverse(n), std::move(out));
}

LevelPartition level_partition(const PlayerPoset& p) {
  LevelPartition part;
  Coalition rest = Coalition::full(p.size());
  while (!rest.empty()) {
    const Coalition level = p.minimal_elements(rest);
    part.levels.push_back(level);
    rest = rest - level;
  }
  return part;
}

}  // namespace corebound
